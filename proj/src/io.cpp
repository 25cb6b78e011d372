#include "bicascade/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "bicascade/error.hpp"

namespace bicascade {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

struct Line {
    std::size_t number;
    std::vector<std::size_t> values;
};

// Splits a stream into numeric lines; comment text is collected separately.
class LineReader {
public:
    LineReader(std::istream& in, const char* what) : in_(in), what_(what) {}

    bool next(Line& line)
    {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++number_;
            const std::string_view text = trim(raw);
            if (text.empty())
                continue;
            if (text.front() == '#') {
                comments_.emplace_back(trim(text.substr(1)));
                continue;
            }
            line.number = number_;
            line.values.clear();
            std::size_t pos = 0;
            while (pos < text.size()) {
                while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
                    ++pos;
                if (pos >= text.size())
                    break;
                std::size_t value = 0;
                const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
                if (ec != std::errc{} || (ptr != text.data() + text.size() && *ptr != ' ' && *ptr != '\t'))
                    throw error("expected non-negative integers");
                line.values.push_back(value);
                pos = static_cast<std::size_t>(ptr - text.data());
            }
            return true;
        }
        return false;
    }

    parse_error error(const std::string& why) const
    {
        return parse_error(std::string(what_) + ", line " + std::to_string(number_) + ": " + why);
    }

    std::vector<std::string>& comments() { return comments_; }

private:
    std::istream& in_;
    const char* what_;
    std::size_t number_ = 0;
    std::vector<std::string> comments_;
};

bool parse_key(const std::string& comment, std::string_view key, std::size_t& value)
{
    const std::string_view text = comment;
    if (text.substr(0, key.size()) != key || text.size() <= key.size() || text[key.size()] != '=')
        return false;
    const std::string_view rest = trim(text.substr(key.size() + 1));
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc{} || ptr != rest.data() + rest.size())
        throw parse_error("bad value in comment '# " + comment + "'");
    return true;
}

} // namespace

GraphDocument read_graph_document(std::istream& in)
{
    LineReader reader(in, "graph");
    Line line;
    if (!reader.next(line))
        throw reader.error("missing 'n_left n_right' header");
    if (line.values.size() != 2)
        throw reader.error("header must be 'n_left n_right'");
    const std::size_t nl = line.values[0];
    const std::size_t nr = line.values[1];

    std::vector<Edge> edges;
    while (reader.next(line)) {
        if (line.values.size() != 2)
            throw reader.error("edge lines must be 'l r'");
        if (line.values[0] >= nl || line.values[1] >= nr)
            throw reader.error("edge (" + std::to_string(line.values[0]) + ", " + std::to_string(line.values[1]) +
                               ") out of range");
        edges.push_back({static_cast<std::uint32_t>(line.values[0]), static_cast<std::uint32_t>(line.values[1])});
    }
    GraphDocument doc;
    try {
        doc.graph = BipartiteGraph(nl, nr, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("graph: ") + e.what());
    }
    doc.comments = std::move(reader.comments());
    return doc;
}

BipartiteGraph read_graph(std::istream& in) { return read_graph_document(in).graph; }

BipartiteGraph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open graph file '" + path + "'");
    return read_graph(in);
}

BipartiteGraph parse_graph(const std::string& text)
{
    std::istringstream in(text);
    return read_graph(in);
}

void write_graph(std::ostream& out, const BipartiteGraph& g, const std::vector<std::string>& comments)
{
    for (const auto& c : comments)
        out << "# " << c << '\n';
    out << g.n_left() << ' ' << g.n_right() << '\n';
    for (const Edge& e : g.edges())
        out << e.l << ' ' << e.r << '\n';
}

std::string format_graph(const BipartiteGraph& g, const std::vector<std::string>& comments)
{
    std::ostringstream out;
    write_graph(out, g, comments);
    return out.str();
}

SubnetworkInstance read_instance(std::istream& in, std::size_t default_d)
{
    GraphDocument doc = read_graph_document(in);
    SubnetworkInstance inst{std::move(doc.graph), {default_d}, std::nullopt};
    for (const auto& c : doc.comments) {
        std::size_t value = 0;
        if (parse_key(c, "d", value))
            inst.d.d = value;
        else if (parse_key(c, "certificate", value))
            inst.certificate = value;
    }
    return inst;
}

void write_instance(std::ostream& out, const SubnetworkInstance& inst)
{
    std::vector<std::string> comments{"d=" + std::to_string(inst.d.d)};
    if (inst.certificate)
        comments.push_back("certificate=" + std::to_string(*inst.certificate));
    write_graph(out, inst.graph, comments);
}

ExactCoverInstance read_exact_cover(std::istream& in)
{
    LineReader reader(in, "exact cover");
    Line line;
    if (!reader.next(line))
        throw reader.error("missing '|U| k' header");
    if (line.values.size() != 2)
        throw reader.error("header must be '|U| k'");
    ExactCoverInstance inst;
    inst.universe_size = line.values[0];
    inst.k = line.values[1];
    while (reader.next(line)) {
        for (std::size_t x : line.values)
            if (x >= inst.universe_size)
                throw reader.error("element " + std::to_string(x) + " outside the universe");
        inst.sets.push_back(line.values);
    }
    return inst;
}

void write_exact_cover(std::ostream& out, const ExactCoverInstance& inst)
{
    out << inst.universe_size << ' ' << inst.k << '\n';
    for (const auto& set : inst.sets) {
        for (std::size_t i = 0; i < set.size(); ++i)
            out << (i ? " " : "") << set[i];
        out << '\n';
    }
}

SimpleGraph read_simple_graph(std::istream& in)
{
    LineReader reader(in, "simple graph");
    Line line;
    if (!reader.next(line))
        throw reader.error("missing 'n_vertices' header");
    if (line.values.size() != 1)
        throw reader.error("header must be 'n_vertices'");
    SimpleGraph g;
    g.n_vertices = line.values[0];
    while (reader.next(line)) {
        if (line.values.size() != 2)
            throw reader.error("edge lines must be 'u v'");
        if (line.values[0] >= g.n_vertices || line.values[1] >= g.n_vertices)
            throw reader.error("vertex out of range");
        g.edges.emplace_back(line.values[0], line.values[1]);
    }
    return g;
}

BipartiteGraph graph_from_spec(const std::string& spec)
{
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t colon = spec.find(':', pos);
        parts.push_back(spec.substr(pos, colon == std::string::npos ? std::string::npos : colon - pos));
        if (colon == std::string::npos)
            break;
        pos = colon + 1;
    }
    std::vector<std::size_t> args;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        std::size_t value = 0;
        const auto& text = parts[i];
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
            throw parse_error("generator spec '" + spec + "': argument '" + text + "' is not a non-negative integer");
        args.push_back(value);
    }
    const std::string& kind = parts.front();
    auto want = [&](std::size_t count) {
        if (args.size() != count)
            throw parse_error("generator spec '" + spec + "': '" + kind + "' takes " + std::to_string(count) + " argument(s)");
    };
    if (kind == "matching") {
        want(1);
        return gen_matching(args[0]);
    }
    if (kind == "star") {
        want(1);
        return gen_star(args[0]);
    }
    if (kind == "kdd") {
        want(2);
        return gen_kdd(args[0], args[1]);
    }
    if (kind == "kdn") {
        want(2);
        return gen_kdn(args[0], args[1]);
    }
    throw parse_error("generator spec '" + spec + "': unknown kind '" + kind + "' (expected matching, star, kdd, kdn)");
}

} // namespace bicascade
