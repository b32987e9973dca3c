#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "fracdecomp/blowup.hpp"
#include "fracdecomp/condense.hpp"
#include "fracdecomp/errors.hpp"
#include "fracdecomp/extremal.hpp"
#include "fracdecomp/generators.hpp"
#include "fracdecomp/io.hpp"
#include "fracdecomp/oracle.hpp"
#include "fracdecomp/pipeline.hpp"
#include "fracdecomp/triangle.hpp"

namespace fracdecomp::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_math = 2;

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    return in;
}

/// Writes through `emit` to `path`, or to `fallback` when path is empty.
void write_to(const std::string& path, std::ostream* fallback, const std::function<void(std::ostream&)>& emit)
{
    if (path.empty())
    {
        if (fallback)
            emit(*fallback);
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    emit(out);
}

/// A file path, or else a named shortcut such as C5, K33, T3,1,1.
Template load_template(const std::string& spec)
{
    if (std::filesystem::exists(spec))
    {
        auto in = open_input(spec);
        return {"W", read_weighted_graph(in)};
    }
    return named_template(spec);
}

WeightedGraph load_weighted(const std::string& spec)
{
    return load_template(spec).graph;
}

Graph load_graph(const std::string& spec)
{
    WeightedGraph w = load_weighted(spec);
    if (!w.is_unit())
        throw InputError("'" + spec + "' must be a plain graph");
    return w.underlying();
}

IndexedPartition load_partition(const std::string& path)
{
    auto in = open_input(path);
    return read_partition(in);
}

TriangleTemplate parse_triangle(std::string spec)
{
    if (!spec.empty() && spec[0] == 'T')
        spec.erase(0, 1);
    std::vector<Rational> e;
    std::stringstream ss(spec);
    for (std::string field; std::getline(ss, field, ',');)
        e.push_back(parse_rational(field));
    if (e.size() != 3)
        throw InputError("template needs three weights e1,e2,e3");
    std::sort(e.begin(), e.end(), std::greater<>());
    return TriangleTemplate(e[0], e[1], e[2]);
}

// Best available lower bound for the decomposition threshold of f, as text:
// exact when the rational bound wins, 12 decimals with a marker otherwise.
std::string lower_bound_text(const Graph& f)
{
    const WeightedGraph w = WeightedGraph::from_graph(f);
    const Rational exact = lemma7_bound(rho_bipartite_min(w));
    if (f.order() > 16)
        return format_rational(exact);
    if (auto rho = rho_fourpart_max(w); rho && *rho >= Rational(1, 3))
    {
        const Real strong = lemma8_bound(*rho).strong;
        if (strong > Real(exact))
            return "≈" + format_real(strong, 12);
    }
    return format_rational(exact);
}

std::string upper_bound_text(const TriangleTemplate& e, bool with_three_quarters)
{
    Rational d = delta_threshold(e);
    if (with_three_quarters)
        d = std::max(d, Rational(3, 4));
    return format_rational(d);
}

void threshold_table(const std::string& family, int max, std::ostream& final_out)
{
    std::ostringstream out;
    if (family == "cycle")
    {
        out << "l lower upper\n";
        for (int l = 5; l <= max; l += 2)
            out << l << ' ' << lower_bound_text(cycle_graph(l)) << ' '
                << upper_bound_text(TriangleTemplate(l - 2, 1, 1), false) << '\n';
    }
    else if (family == "K_a11")
    {
        out << "a lower upper\n";
        for (int a = 1; a <= max; ++a)
            out << a << ' ' << lower_bound_text(complete_multipartite({a, 1, 1})) << ' '
                << upper_bound_text(TriangleTemplate(a, a, 1), true) << '\n';
    }
    else if (family == "K_aa1")
    {
        out << "a lower upper\n";
        for (int a = 1; a <= max; ++a)
            out << a << ' ' << lower_bound_text(complete_multipartite({a, a, 1})) << ' '
                << upper_bound_text(TriangleTemplate(a * a, a, a), true) << '\n';
    }
    else
    {
        throw InputError("unknown family '" + family + "' (cycle, K_a11, K_aa1)");
    }
    final_out << out.str();
}

void report_cover(const CoverReport& report, std::ostream& out)
{
    out << "status=" << to_string(report.status) << '\n';
    if (report.status == CoverStatus::violation)
    {
        const auto& v = report.violations.front();
        out << "edge " << to_string(v.edge) << " over-covered by " << format_rational(v.excess) << '\n';
    }
    else if (report.status == CoverStatus::leftover)
    {
        const auto& [e, w] = *report.leftover.weights().begin();
        out << "edge " << to_string(e) << " short by " << format_rational(w) << '\n';
    }
    else if (report.status == CoverStatus::invalid)
    {
        out << report.problem << '\n';
    }
}

int verify_decomposition(const std::string& host_spec, std::istream& in, std::ostream& out)
{
    const WeightedGraph host = load_weighted(host_spec);
    const auto copies = read_decomposition_certificate(in);
    const CoverReport report = verify_fractional_decomposition(host, copies);
    out << "copies=" << copies.size() << ' ';
    report_cover(report, out);
    return report.status == CoverStatus::exact ? exit_ok : exit_math;
}

int verify_nonexistence(const std::string& host_spec, std::istream& in, std::ostream& out)
{
    const Graph host = load_graph(host_spec);
    const NonexistenceRecord rec = read_nonexistence_certificate(in);
    if (rec.host_vertices != host.order())
    {
        out << "invalid: certificate is for " << rec.host_vertices << " vertices, host has " << host.order()
            << '\n';
        return exit_math;
    }
    validate_partition(Graph(host.order()), rec.parts);
    const auto cert = certificate_from_parts(host, rec.parts, rec.rho, rec.direction);
    if (cert.g0.size() != rec.g0_edges || cert.g1.size() != rec.g1_edges)
    {
        out << "invalid: recorded edge counts " << rec.g0_edges << '/' << rec.g1_edges << " but parts give "
            << cert.g0.size() << '/' << cert.g1.size() << '\n';
        return exit_math;
    }
    const CertificateCheck check = check_certificate(host, cert, rec.pattern.graph);
    if (!check.valid)
    {
        out << "invalid: " << check.reason << '\n';
        return exit_math;
    }
    out << "valid: no fractional " << rec.pattern.name << "-decomposition (" << to_string(rec.direction)
        << ", rho=" << format_rational(rec.rho) << ", |G0|=" << cert.g0.size() << ", |G1|=" << cert.g1.size()
        << ")\n";
    return exit_ok;
}

int verify_infeasibility(const std::string& host_spec, std::istream& in, std::ostream& out, int max_vertices)
{
    const WeightedGraph host = load_weighted(host_spec);
    const PotentialRecord rec = read_infeasibility_certificate(in);
    std::map<Edge, Rational> z;
    for (const auto& [e, value] : rec.potentials)
    {
        if (!host.weight(e.u, e.v))
            throw InputError("potential on non-edge " + to_string(e));
        z[e] = value;
    }
    Rational total = 0;
    for (const auto& [e, w] : host.weights())
        total += w * (z.count(e) ? z[e] : Rational(0));
    if (total >= 0)
    {
        out << "invalid: potentials give the host weight " << format_rational(total) << " >= 0\n";
        return exit_math;
    }
    const auto embeddings = enumerate_embeddings(rec.pattern.graph, host.underlying(), max_vertices);
    for (const auto& phi : embeddings)
    {
        Rational sum = 0;
        for (const auto& [f, w] : rec.pattern.graph.weights())
        {
            auto it = z.find(make_edge(phi[f.u], phi[f.v]));
            if (it != z.end())
                sum += w * it->second;
        }
        if (sum < 0)
        {
            out << "invalid: embedding";
            for (int v : phi)
                out << ' ' << v;
            out << " has potential " << format_rational(sum) << " < 0\n";
            return exit_math;
        }
    }
    out << "valid: no fractional " << rec.pattern.name << "-decomposition (" << embeddings.size()
        << " embeddings, host potential " << format_rational(total) << ")\n";
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact fractional graph decompositions into weighted triangles and tripartite templates"};
    app.require_subcommand(1);
    app.fallthrough();

    int jobs = 1;
    std::uint64_t seed = 1;
    app.add_option("--jobs", jobs, "Worker threads for triangle decomposition")->check(CLI::Range(1, 256));
    app.add_option("--seed", seed, "Seed for random test-data generation");

    std::string e1, e2, e3;
    auto* threshold = app.add_subcommand("threshold", "delta(e1,e2,e3) as an exact fraction");
    threshold->add_option("--e1", e1)->required();
    threshold->add_option("--e2", e2)->required();
    threshold->add_option("--e3", e3)->required();

    std::string family;
    int max = 0;
    auto* table = app.add_subcommand("threshold-table", "Lower and upper threshold bounds for a graph family");
    table->add_option("--family", family, "cycle, K_a11 or K_aa1")->required();
    table->add_option("--max", max, "Largest cycle length or part size a")->required()->check(CLI::NonNegativeNumber);

    std::string graph_spec, template_spec, output, host_output, partition_path;
    auto* decompose = app.add_subcommand("decompose", "Fractional T_e-decomposition of a plain graph");
    decompose->add_option("--graph", graph_spec, "Graph file or name")->required();
    decompose->add_option("--template", template_spec, "e1,e2,e3")->required();
    decompose->add_option("--output", output, "Certificate file");

    auto* condense_cmd = app.add_subcommand("condense", "Weighted graph on the parts of a partition");
    condense_cmd->add_option("--graph", graph_spec)->required();
    condense_cmd->add_option("--partition", partition_path)->required();
    condense_cmd->add_option("--output", output);

    int q = 0;
    std::uint64_t max_copies = default_max_copies;
    auto* blowup = app.add_subcommand("blowup", "F-decomposition of the q-blow-up of condense(F, P)");
    blowup->add_option("--graph", graph_spec)->required();
    blowup->add_option("--partition", partition_path)->required();
    blowup->add_option("--q", q)->required()->check(CLI::PositiveNumber);
    blowup->add_option("--output", output, "Certificate file");
    blowup->add_option("--host-output", host_output, "Blow-up graph file");
    blowup->add_option("--max-copies", max_copies, "Largest decomposition to materialize");

    int lemma = 0;
    int n = 0;
    auto* extremal = app.add_subcommand("extremal", "Host graph with no fractional W-decomposition");
    extremal->add_option("--lemma", lemma, "7 (bipartition) or 8 (four parts)")->required()->check(CLI::IsMember({7, 8}));
    extremal->add_option("--template-graph", template_spec)->required();
    extremal->add_option("--n", n, "Host order; the four-part construction defaults to the smallest admissible");
    extremal->add_option("--output", output, "Certificate file");
    extremal->add_option("--host-output", host_output, "Host graph file");

    std::string host_spec, certificate_path;
    int max_vertices = default_oracle_max_vertices;
    auto* verify = app.add_subcommand("verify", "Re-check a certificate against its host graph");
    verify->add_option("--host", host_spec)->required();
    verify->add_option("--certificate", certificate_path)->required();
    verify->add_option("--max-vertices", max_vertices, "Host size limit for infeasibility certificates");

    std::string witness;
    auto* oracle = app.add_subcommand("oracle", "Decide fractional W-decomposability by exact LP");
    oracle->add_option("--template", template_spec)->required();
    oracle->add_option("--host", host_spec)->required();
    oracle->add_option("--witness", witness, "Certificate file for either answer");
    oracle->add_option("--max-vertices", max_vertices);

    std::string min_degree;
    double p = -1.0;
    auto* random = app.add_subcommand("random-graph", "Random graph with a minimum degree");
    random->add_option("--n", n)->required()->check(CLI::Range(2, 100000));
    random->add_option("--min-degree", min_degree, "Minimum degree as a fraction of n, p/q")->required();
    random->add_option("--p", p, "Edge probability before repair");
    random->add_option("--output", output);

    std::vector<std::string> argv_storage{"fracdecomp"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage)
        argv.push_back(a.data());

    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e)
    {
        std::ostringstream help_out, help_err;
        const int code = app.exit(e, help_out, help_err);
        out << help_out.str();
        if (code == 0)
            return exit_ok;
        std::string message = e.what();
        err << "error: " << message << '\n';
        return exit_input;
    }

    try
    {
        if (*threshold)
        {
            TriangleTemplate e(parse_rational(e1), parse_rational(e2), parse_rational(e3));
            out << format_rational(delta_threshold(e)) << '\n';
        }
        else if (*table)
        {
            threshold_table(family, max, out);
        }
        else if (*decompose)
        {
            const Graph g = load_graph(graph_spec);
            const TriangleTemplate e = parse_triangle(template_spec);
            const auto result = fractional_triangle_decomposition(g, e, jobs);
            write_to(output, nullptr,
                     [&](std::ostream& o) { write_decomposition_certificate(o, result.decomposition.copies); });
            out << result.summary() << '\n';
        }
        else if (*condense_cmd)
        {
            const Graph f = load_graph(graph_spec);
            const WeightedGraph w = condense(f, load_partition(partition_path));
            write_to(output, &out, [&](std::ostream& o) { write_graph(o, w); });
        }
        else if (*blowup)
        {
            const Graph f = load_graph(graph_spec);
            const IndexedPartition parts = load_partition(partition_path);
            const WeightedGraph host = blow_up(condense(f, parts), q);
            const Integer count = count_injections(f, parts, q);
            write_to(host_output, nullptr, [&](std::ostream& o) { write_graph(o, host); });
            const Rational alpha = Rational(q * q) / Rational(count);
            if (count <= Integer(max_copies))
            {
                const auto d = blowup_decomposition(f, parts, q, max_copies);
                write_to(output, nullptr, [&](std::ostream& o) { write_decomposition_certificate(o, d.copies); });
                out << "copies=" << count << " alpha=" << format_rational(alpha) << " status=exact\n";
            }
            else
            {
                if (!output.empty())
                    throw InputError("decomposition has " + count.str() + " copies, above --max-copies");
                if (!verify_blowup_identity(f, parts, q))
                    throw InternalError("blow-up counting identity failed");
                out << "copies=" << count << " alpha=" << format_rational(alpha) << " status=exact-by-count\n";
            }
        }
        else if (*extremal)
        {
            const Template w = load_template(template_spec);
            if (lemma == 8 && n == 0)
            {
                auto smallest = smallest_lemma8_order(w.graph);
                if (!smallest)
                    throw DecompositionFailure("no admissible order for the four-part construction");
                n = *smallest;
            }
            const ExtremalConstruction c = lemma == 7 ? build_lemma7_graph(w.graph, n) : build_lemma8_graph(w.graph, n);
            const CertificateCheck check = check_certificate(c.host, c.certificate, w.graph);
            if (!check.valid)
                throw InternalError("construction produced an invalid certificate: " + check.reason);
            write_to(host_output, nullptr, [&](std::ostream& o) { write_graph(o, c.host); });
            write_to(output, nullptr, [&](std::ostream& o) { write_nonexistence_certificate(o, c.certificate, w); });
            out << "n=" << n << " h=" << c.h << " g=" << c.modulus << " rho=" << format_rational(c.certificate.rho)
                << " |G0|=" << c.certificate.g0.size() << " |G1|=" << c.certificate.g1.size()
                << " min-degree=" << c.host.min_degree() << " certificate=valid\n";
        }
        else if (*verify)
        {
            auto in = open_input(certificate_path);
            const std::string kind = peek_certificate_kind(in);
            if (kind == "fractional-decomposition")
                return verify_decomposition(host_spec, in, out);
            if (kind == "nonexistence-certificate")
                return verify_nonexistence(host_spec, in, out);
            if (kind == "infeasibility-certificate")
                return verify_infeasibility(host_spec, in, out, max_vertices);
            throw InputError("unrecognized certificate '" + kind + "'");
        }
        else if (*oracle)
        {
            const Template w = load_template(template_spec);
            const WeightedGraph host = load_weighted(host_spec);
            const OracleResult r = fractional_decomposition_exists(w, host, max_vertices);
            write_to(witness, nullptr, [&](std::ostream& o) {
                if (r.feasible)
                    write_decomposition_certificate(o, r.witness->copies);
                else
                    write_infeasibility_certificate(o, w, r.potentials);
            });
            out << (r.feasible ? "feasible" : "infeasible") << '\n';
        }
        else if (*random)
        {
            const Graph g = random_graph_min_degree(n, parse_rational(min_degree), seed, p);
            write_to(output, &out, [&](std::ostream& o) { write_graph(o, g); });
        }
        return exit_ok;
    }
    catch (const InputError& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
    catch (const DecompositionFailure& e)
    {
        err << "failure: " << e.what() << '\n';
        return exit_math;
    }
}

}  // namespace fracdecomp::cli
