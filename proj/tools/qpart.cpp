#include <qpart/bijection.hpp>
#include <qpart/genfun.hpp>
#include <qpart/identity.hpp>
#include <qpart/mod2.hpp>
#include <qpart/partition.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

using namespace qpart;

namespace
{

std::string join(const std::vector<long> &v, const char *sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? sep : "") + std::to_string(v[i]);
    }
    return out;
}

void print_trace(const Trace &trace)
{
    for (const TraceStep &s : trace) {
        std::cout << "-- " << s.label << "\n" << s.diagram;
        if (!s.diagram.empty() && s.diagram.back() != '\n') {
            std::cout << "\n";
        }
    }
}

int cmd_stat(const std::string &text)
{
    const Partition p = Partition::parse(text);
    const PartitionStats s = stats(p);
    std::cout << "partition   " << p.to_string() << "\n"
              << "weight      " << p.weight() << "\n"
              << "largest     " << s.largest << "\n"
              << "parts       " << s.parts << "\n"
              << "ones        " << s.ones << "\n"
              << "above-ones  " << s.above_ones << "\n";
    if (s.gamma) {
        std::cout << "gamma       " << *s.gamma << "\n";
    }
    std::cout << "rank        " << s.rank << "\n";
    if (s.crank) {
        std::cout << "crank       " << *s.crank << "\n";
    }
    const RankSetDescriptor rs = rank_set(p);
    std::cout << "rank-set    {" << join(rs.prefix, ", ") << (rs.prefix.empty() ? "" : ", ") << rs.tail_from
              << ", " << rs.tail_from + 1 << ", ...}\n";
    if (has_distinct_odd_parts(p) && !p.empty()) {
        std::cout << "m2-rank     " << m2_rank(Mod2Graph(p)) << "\n";
    }
    const DurfeeDissection d = durfee_dissection(p);
    std::cout << "durfee      " << join(d.sizes) << "\n";
    for (long k = 2; k <= static_cast<long>(d.sizes.size()) + 1; ++k) {
        std::cout << "k-rank[" << k << "]   " << k_rank(p, k) << "\n";
    }
    return 0;
}

int cmd_enumerate(long n, std::optional<long> max_part, std::optional<long> max_parts, const std::string &cls)
{
    if (n < 0) {
        throw std::invalid_argument("n must be nonnegative");
    }
    EnumerationOptions opts;
    if (max_part) {
        opts.max_part = static_cast<Part>(*max_part);
    }
    opts.max_parts = max_parts;
    if (cls == "E") {
        opts.filter = has_distinct_odd_parts;
    } else if (!cls.empty()) {
        throw std::invalid_argument("unknown class '" + cls + "' (only E is supported)");
    }
    long count = 0;
    for_each_partition(n, opts, [&](const Partition &p) {
        std::cout << p.to_string() << "\n";
        ++count;
    });
    std::cerr << count << " partitions\n";
    return 0;
}

int cmd_bijection(const std::string &name, const std::string &text, std::optional<long> param, bool trace_on)
{
    const Partition p = Partition::parse(text);
    Trace trace;
    Trace *t = trace_on ? &trace : nullptr;
    const auto need = [&](const char *what) {
        if (!param) {
            throw std::invalid_argument(name + " needs " + what);
        }
        return *param;
    };
    std::string image;
    if (name == "dyson-adjoint") {
        image = dyson_adjoint(p, need("-m"), t).to_string();
    } else if (name == "dyson-adjoint-inverse") {
        image = dyson_adjoint_inverse(p, need("-m"), t).to_string();
    } else if (name == "rank-set-insertion") {
        image = rank_set_insertion(p, need("-k"), t).to_string();
    } else if (name == "rank-set-insertion-inverse") {
        image = rank_set_insertion_inverse(p, need("-k"), t).to_string();
    } else if (name == "crank-map") {
        image = crank_map(p, need("-k"), t).to_string();
    } else if (name == "crank-map-inverse") {
        image = crank_map_inverse(p, need("-k"), t).to_string();
    } else if (name == "pseudo-conjugate") {
        image = pseudo_conjugate(p, t).to_string();
    } else if (name == "mod2-adjoint") {
        image = mod2_adjoint(Mod2Graph(p), need("-r"), t).partition().to_string();
    } else if (name == "mod2-adjoint-inverse") {
        image = mod2_adjoint_inverse(Mod2Graph(p), need("-r"), t).partition().to_string();
    } else {
        throw std::invalid_argument("unknown bijection '" + name + "'");
    }
    if (trace_on) {
        print_trace(trace);
    }
    std::cout << image << "\n";
    return 0;
}

int cmd_series(const std::string &family_name, SeriesSpec spec, const std::string &formula_name, long period)
{
    const auto family = parse_family(family_name);
    if (!family) {
        throw std::invalid_argument("unknown family '" + family_name + "'");
    }
    spec.family = *family;
    std::vector<Formula> formulas;
    if (formula_name.empty()) {
        formulas = formulas_for(*family);
    } else {
        const auto f = parse_formula(formula_name);
        if (!f) {
            throw std::invalid_argument("unknown formula '" + formula_name + "'");
        }
        formulas.push_back(*f);
    }
    const QSeries lhs = oracle_series(spec);
    std::cout << "oracle: " << lhs.to_string() << "\n";
    bool all_equal = true;
    for (const Formula f : formulas) {
        const QSeries rhs = formula_series(spec, f, period);
        const auto mode = spec.order ? CompareMode::truncated_series : CompareMode::exact_polynomial;
        const SeriesComparison c = compare(lhs, rhs, mode);
        all_equal = all_equal && c.equal;
        std::cout << to_string(f) << ": " << rhs.to_string() << "\n"
                  << "  " << (c.equal ? "agrees with the oracle" : "DIFFERS from the oracle");
        if (c.first_mismatch) {
            std::cout << " at q^" << c.first_mismatch->exponent << " (" << c.first_mismatch->lhs << " vs "
                      << c.first_mismatch->rhs << ")";
        }
        std::cout << "\n";
    }
    return all_equal ? 0 : 1;
}

int cmd_verify(const std::string &filter, std::optional<Exponent> trunc, bool json, unsigned jobs,
               const std::string &out_path, bool timing)
{
    const auto reports = run_suite(filter, trunc, jobs);
    std::ostringstream out;
    if (json) {
        out << reports_to_json(reports, timing) << "\n";
    } else {
        std::size_t failed = 0;
        std::size_t exploratory = 0;
        for (const IdentityReport &r : reports) {
            std::string params;
            for (const auto &[k, v] : r.check.params) {
                params += " " + k + "=" + std::to_string(v);
            }
            const char *status = r.pass ? "PASS" : (r.gating ? "FAIL" : "MISS");
            out << status << "  " << r.check.id << params;
            if (r.check.truncation) {
                out << " T=" << *r.check.truncation;
            }
            if (!r.specialization.empty()) {
                out << "  [" << r.specialization << "]";
            }
            if (r.comparison.first_mismatch) {
                const auto &m = *r.comparison.first_mismatch;
                out << "  first mismatch at q^" << m.exponent << ": " << m.lhs << " vs " << m.rhs;
            }
            if (r.error) {
                out << "  error: " << *r.error;
            }
            out << "\n";
            failed += (!r.pass && r.gating) ? 1 : 0;
            exploratory += r.gating ? 0 : 1;
        }
        out << reports.size() << " checks, " << failed << " gating failures, " << exploratory
            << " exploratory\n";
    }
    if (out_path.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(out_path);
        if (!f) {
            throw std::runtime_error("cannot write " + out_path);
        }
        f << out.str();
    }
    if (reports.empty()) {
        std::cerr << "no identity matches '" << filter << "'\n";
    }
    return all_gating_pass(reports) ? 0 : 1;
}

int cmd_table(long modulus, long n)
{
    const RankCrankTable t = rank_crank_table(modulus, n);
    std::cout << "p(" << n << ") = " << t.partitions << "\n";
    std::cout << "k  N(k," << modulus << "," << n << ")  M(k," << modulus << "," << n << ")\n";
    for (long k = 0; k < modulus; ++k) {
        std::cout << k << "  " << t.rank_counts[static_cast<std::size_t>(k)] << "  "
                  << t.crank_counts[static_cast<std::size_t>(k)] << "\n";
    }
    return 0;
}

int cmd_graph(const std::string &text, bool mod2)
{
    const Partition p = Partition::parse(text);
    std::cout << (mod2 ? mod2_diagram(Mod2Graph(p)) : ferrers_diagram(p));
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact partition statistics, bijections and q-series identity checks"};
    app.require_subcommand(1);

    std::string partition_text;

    auto *stat = app.add_subcommand("stat", "Statistics of a partition given as 7+6+6+5+2");
    stat->add_option("partition", partition_text)->required();

    long enum_n = 0;
    std::optional<long> max_part;
    std::optional<long> max_parts;
    std::string cls;
    auto *enumerate = app.add_subcommand("enumerate", "List the partitions of n");
    enumerate->add_option("n", enum_n)->required();
    enumerate->add_option("--max-part", max_part, "Largest part at most L");
    enumerate->add_option("--max-parts", max_parts, "At most M parts");
    enumerate->add_option("--class", cls, "E: distinct odd parts");

    std::string bij_name;
    std::optional<long> bij_param;
    bool trace = false;
    auto *bij = app.add_subcommand("bijection", "Apply a bijection, optionally with step diagrams");
    bij->add_option("name", bij_name,
                    "dyson-adjoint, rank-set-insertion, crank-map, pseudo-conjugate, mod2-adjoint, or any of these "
                    "with -inverse")
        ->required();
    bij->add_option("partition", partition_text)->required();
    auto *opt_m = bij->add_option("-m", bij_param, "m for dyson-adjoint");
    auto *opt_k = bij->add_option("-k", bij_param, "k for rank-set-insertion and crank-map");
    auto *opt_r = bij->add_option("-r", bij_param, "r for mod2-adjoint");
    opt_m->excludes(opt_k)->excludes(opt_r);
    opt_k->excludes(opt_r);
    bij->add_flag("--trace", trace, "Print intermediate diagrams");

    std::string family;
    std::string formula_name;
    SeriesSpec spec;
    std::optional<Exponent> series_trunc;
    long period = 1;
    auto *series = app.add_subcommand("series", "Print a generating function from the census and from its formulas");
    series->add_option("family", family, "Q QL P PL G GL C CL Chat ChatL E Etilde Ehat FG SPC")->required();
    series->add_option("--m", spec.m);
    series->add_option("--L", spec.L);
    series->add_option("--k", spec.k);
    series->add_option("--r", spec.r);
    series->add_option("--trunc", series_trunc, "Truncation order (bounded families default to exact)");
    series->add_option("--formula", formula_name, "One formula instead of all formulas for the family");
    series->add_option("--period", period, "n of the periodic bounded-rank sums")->check(CLI::PositiveNumber);

    std::string filter;
    std::optional<Exponent> verify_trunc;
    bool json = false;
    bool no_timing = false;
    unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
    std::string out_path;
    auto *verify = app.add_subcommand("verify", "Run the identity suite; exit 0 iff every gating check passes");
    verify->add_option("--filter", filter, "Glob over identity ids, e.g. 'heine.*'");
    verify->add_option("--trunc", verify_trunc, "Override the truncation of every truncated-series check")
        ->check(CLI::NonNegativeNumber);
    verify->add_flag("--json", json, "Emit the JSON report");
    verify->add_flag("--no-timing", no_timing, "Omit elapsed_ms for byte-stable JSON");
    verify->add_option("--jobs", jobs, "Concurrent checks")->check(CLI::PositiveNumber);
    verify->add_option("--out", out_path, "Write the report to a file");

    long modulus = 5;
    long table_n = 4;
    auto *table = app.add_subcommand("table", "Rank and crank residue-class counts");
    table->add_option("--modulus", modulus)->check(CLI::PositiveNumber);
    table->add_option("--n", table_n)->check(CLI::NonNegativeNumber);

    bool mod2 = false;
    auto *graph = app.add_subcommand("graph", "Ferrers or 2-modular diagram");
    graph->add_option("partition", partition_text)->required();
    graph->add_flag("--mod2", mod2, "2-modular graph (distinct odd parts)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (stat->parsed()) {
            return cmd_stat(partition_text);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(enum_n, max_part, max_parts, cls);
        }
        if (bij->parsed()) {
            return cmd_bijection(bij_name, partition_text, bij_param, trace);
        }
        if (series->parsed()) {
            if (series_trunc) {
                spec.order = *series_trunc;
            } else if (family != "QL" && family != "PL") {
                spec.order = 20;
            }
            return cmd_series(family, spec, formula_name, period);
        }
        if (verify->parsed()) {
            return cmd_verify(filter, verify_trunc, json, jobs, out_path, !no_timing);
        }
        if (table->parsed()) {
            return cmd_table(modulus, table_n);
        }
        if (graph->parsed()) {
            return cmd_graph(partition_text, mod2);
        }
    } catch (const std::exception &e) {
        std::cerr << "qpart: error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
