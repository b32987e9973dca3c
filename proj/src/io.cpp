#include "fracdecomp/io.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "fracdecomp/errors.hpp"

namespace fracdecomp {

namespace {

class LineReader
{
    public:
        explicit LineReader(std::istream& in) : in_(in) {}

        /// Next non-blank, non-comment line split on whitespace.
        bool next(std::vector<std::string>& tokens)
        {
            std::string line;
            while (std::getline(in_, line))
            {
                ++line_;
                auto hash = line.find('#');
                if (hash != std::string::npos)
                    line.erase(hash);
                std::istringstream ss(line);
                tokens.clear();
                for (std::string t; ss >> t;)
                    tokens.push_back(t);
                if (!tokens.empty())
                    return true;
            }
            return false;
        }

        std::vector<std::string> expect(const char* what)
        {
            std::vector<std::string> tokens;
            if (!next(tokens))
                throw InputError(std::string("unexpected end of input, expected ") + what);
            return tokens;
        }

        [[noreturn]] void fail(const std::string& msg) const
        {
            throw InputError("line " + std::to_string(line_) + ": " + msg);
        }

        int to_int(const std::string& s) const
        {
            std::size_t used = 0;
            long v = 0;
            try
            {
                v = std::stol(s, &used);
            }
            catch (const std::exception&)
            {
                fail("expected an integer, got '" + s + "'");
            }
            if (used != s.size() || v < 0 || v > (1L << 30))
                fail("expected a nonnegative integer, got '" + s + "'");
            return static_cast<int>(v);
        }

        Rational to_rational(const std::string& s) const
        {
            try
            {
                return parse_rational(s);
            }
            catch (const InputError& e)
            {
                fail(e.what());
            }
        }

    private:
        std::istream& in_;
        int line_ = 0;
};

WeightedGraph read_edges(LineReader& r, int n, int m)
{
    WeightedGraph g(n);
    for (int i = 0; i < m; ++i)
    {
        auto t = r.expect("an edge line");
        if (t.size() != 2 && t.size() != 3)
            r.fail("edge lines are 'u v' or 'u v p/q'");
        int u = r.to_int(t[0]);
        int v = r.to_int(t[1]);
        Rational w = t.size() == 3 ? r.to_rational(t[2]) : Rational(1);
        if (g.has_edge(u, v))
            r.fail("parallel edge " + to_string(make_edge(u, v)));
        try
        {
            g.set_weight(u, v, w);
        }
        catch (const InputError& e)
        {
            r.fail(e.what());
        }
    }
    return g;
}

Template read_template_block(LineReader& r, const std::vector<std::string>& header)
{
    if (header.size() != 4 || header[0] != "template")
        r.fail("expected 'template <name> <k> <m>'");
    Template t;
    t.name = header[1];
    t.graph = read_edges(r, r.to_int(header[2]), r.to_int(header[3]));
    return t;
}

void write_template_block(std::ostream& out, const Template& t)
{
    out << "template " << t.name << ' ' << t.graph.order() << ' ' << t.graph.size() << '\n';
    for (const auto& [e, w] : t.graph.weights())
        out << e.u << ' ' << e.v << ' ' << format_rational(w) << '\n';
}

std::size_t keyed_count(LineReader& r, const char* key)
{
    auto t = r.expect(key);
    if (t.size() != 2 || t[0] != key)
        r.fail(std::string("expected '") + key + " <count>'");
    return static_cast<std::size_t>(r.to_int(t[1]));
}

}  // namespace

WeightedGraph read_weighted_graph(std::istream& in)
{
    LineReader r(in);
    auto header = r.expect("'n m'");
    if (header.size() != 2)
        r.fail("header must be 'n m'");
    WeightedGraph g = read_edges(r, r.to_int(header[0]), r.to_int(header[1]));
    std::vector<std::string> extra;
    if (r.next(extra))
        r.fail("more edge lines than announced");
    return g;
}

Graph read_graph(std::istream& in)
{
    WeightedGraph w = read_weighted_graph(in);
    if (!w.is_unit())
        throw InputError("expected a plain graph, found non-unit weights");
    return w.underlying();
}

void write_graph(std::ostream& out, const WeightedGraph& g)
{
    const bool plain = g.is_unit();
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [e, w] : g.weights())
    {
        out << e.u << ' ' << e.v;
        if (!plain)
            out << ' ' << format_rational(w);
        out << '\n';
    }
}

void write_graph(std::ostream& out, const Graph& g)
{
    write_graph(out, WeightedGraph::from_graph(g));
}

IndexedPartition read_partition(std::istream& in)
{
    LineReader r(in);
    IndexedPartition p;
    std::vector<std::string> t;
    while (r.next(t))
    {
        std::vector<int> part;
        for (const auto& s : t)
            part.push_back(r.to_int(s));
        p.parts.push_back(std::move(part));
    }
    return p;
}

void write_partition(std::ostream& out, const IndexedPartition& p)
{
    for (const auto& part : p.parts)
    {
        for (std::size_t i = 0; i < part.size(); ++i)
            out << (i ? " " : "") << part[i];
        out << '\n';
    }
}

void write_decomposition_certificate(std::ostream& out, const std::vector<ScaledCopy>& copies)
{
    // Templates in order of first use; distinct templates need distinct names.
    std::vector<const Template*> templates;
    std::map<std::string, const Template*> by_name;
    for (const auto& c : copies)
    {
        auto [it, fresh] = by_name.emplace(c.pattern->name, c.pattern.get());
        if (fresh)
            templates.push_back(c.pattern.get());
        else if (it->second != c.pattern.get() && !(it->second->graph == c.pattern->graph))
            throw InputError("two different templates share the name '" + c.pattern->name + "'");
    }

    out << "fractional-decomposition\n";
    for (const Template* t : templates)
        write_template_block(out, *t);
    out << "copies " << copies.size() << '\n';
    for (const auto& c : copies)
    {
        out << c.pattern->name;
        for (int v : c.embedding)
            out << ' ' << v;
        out << ' ' << format_rational(c.alpha) << '\n';
    }
}

std::vector<ScaledCopy> read_decomposition_certificate(std::istream& in)
{
    LineReader r(in);
    auto head = r.expect("a certificate header");
    if (head.size() != 1 || head[0] != "fractional-decomposition")
        r.fail("not a fractional-decomposition certificate");

    std::map<std::string, std::shared_ptr<const Template>> templates;
    std::vector<std::string> t = r.expect("'template' or 'copies'");
    while (t[0] == "template")
    {
        auto tmpl = std::make_shared<const Template>(read_template_block(r, t));
        if (!templates.emplace(tmpl->name, tmpl).second)
            r.fail("duplicate template '" + tmpl->name + "'");
        t = r.expect("'template' or 'copies'");
    }
    if (t.size() != 2 || t[0] != "copies")
        r.fail("expected 'copies <count>'");
    const int count = r.to_int(t[1]);

    std::vector<ScaledCopy> copies;
    copies.reserve(count);
    for (int i = 0; i < count; ++i)
    {
        auto line = r.expect("a copy line");
        auto it = templates.find(line[0]);
        if (it == templates.end())
            r.fail("unknown template '" + line[0] + "'");
        const int k = it->second->graph.order();
        if (static_cast<int>(line.size()) != k + 2)
            r.fail("copy of " + line[0] + " needs " + std::to_string(k) + " vertices and a scale factor");
        ScaledCopy c{it->second, std::vector<int>(k), r.to_rational(line.back())};
        for (int j = 0; j < k; ++j)
            c.embedding[j] = r.to_int(line[j + 1]);
        copies.push_back(std::move(c));
    }
    std::vector<std::string> extra;
    if (r.next(extra))
        r.fail("trailing content after the last copy");
    return copies;
}

void write_nonexistence_certificate(std::ostream& out, const EdgeBipartitionCertificate& cert, const Template& w)
{
    out << "nonexistence-certificate\n";
    out << "direction " << to_string(cert.direction) << '\n';
    out << "rho " << format_rational(cert.rho) << '\n';
    write_template_block(out, w);
    out << "host-vertices " << cert.g0.order() << '\n';
    out << "parts " << cert.parts.part_count() << '\n';
    write_partition(out, cert.parts);
    out << "g0-edges " << cert.g0.size() << '\n';
    out << "g1-edges " << cert.g1.size() << '\n';
}

NonexistenceRecord read_nonexistence_certificate(std::istream& in)
{
    LineReader r(in);
    NonexistenceRecord rec;
    auto head = r.expect("a certificate header");
    if (head.size() != 1 || head[0] != "nonexistence-certificate")
        r.fail("not a nonexistence certificate");

    auto dir = r.expect("'direction'");
    if (dir.size() != 2 || dir[0] != "direction")
        r.fail("expected 'direction internal-heavy|crossing-light'");
    if (dir[1] == "internal-heavy")
        rec.direction = CertificateDirection::internal_heavy;
    else if (dir[1] == "crossing-light")
        rec.direction = CertificateDirection::crossing_light;
    else
        r.fail("unknown direction '" + dir[1] + "'");

    auto rho = r.expect("'rho'");
    if (rho.size() != 2 || rho[0] != "rho")
        r.fail("expected 'rho p/q'");
    rec.rho = r.to_rational(rho[1]);

    rec.pattern = read_template_block(r, r.expect("'template'"));
    rec.host_vertices = static_cast<int>(keyed_count(r, "host-vertices"));
    const std::size_t parts = keyed_count(r, "parts");
    for (std::size_t i = 0; i < parts; ++i)
    {
        auto line = r.expect("a part line");
        std::vector<int> part;
        for (const auto& s : line)
            part.push_back(r.to_int(s));
        rec.parts.parts.push_back(std::move(part));
    }
    rec.g0_edges = keyed_count(r, "g0-edges");
    rec.g1_edges = keyed_count(r, "g1-edges");
    return rec;
}

void write_infeasibility_certificate(std::ostream& out, const Template& w,
                                     const std::vector<std::pair<Edge, Rational>>& potentials)
{
    out << "infeasibility-certificate\n";
    write_template_block(out, w);
    out << "potentials " << potentials.size() << '\n';
    for (const auto& [e, z] : potentials)
        out << e.u << ' ' << e.v << ' ' << format_rational(z) << '\n';
}

PotentialRecord read_infeasibility_certificate(std::istream& in)
{
    LineReader r(in);
    auto head = r.expect("a certificate header");
    if (head.size() != 1 || head[0] != "infeasibility-certificate")
        r.fail("not an infeasibility certificate");
    PotentialRecord rec;
    rec.pattern = read_template_block(r, r.expect("'template'"));
    const std::size_t count = keyed_count(r, "potentials");
    for (std::size_t i = 0; i < count; ++i)
    {
        auto t = r.expect("a potential line");
        if (t.size() != 3)
            r.fail("potential lines are 'u v p/q'");
        int u = r.to_int(t[0]);
        int v = r.to_int(t[1]);
        if (u == v)
            r.fail("loop in potentials");
        rec.potentials.emplace_back(make_edge(u, v), r.to_rational(t[2]));
    }
    return rec;
}

std::string peek_certificate_kind(std::istream& in)
{
    auto start = in.tellg();
    LineReader r(in);
    std::vector<std::string> t;
    std::string kind = r.next(t) ? t[0] : std::string();
    in.clear();
    in.seekg(start);
    return kind;
}

}  // namespace fracdecomp
