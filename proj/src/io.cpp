#include "sparsehalf/io.hpp"

#include <fstream>
#include <sstream>

#include "sparsehalf/errors.hpp"
#include "sparsehalf/generators.hpp"
#include "sparsehalf/halves.hpp"

namespace sparsehalf {

namespace {

// Yields non-comment, non-blank lines.
bool next_data_line(std::istream& in, std::string* line) {
    while (std::getline(in, *line)) {
        const auto first = line->find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if ((*line)[first] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    if (!next_data_line(in, &line)) throw std::invalid_argument("edge list: empty input");
    std::istringstream header(line);
    long long n = 0, m = 0;
    if (!(header >> n >> m)) throw std::invalid_argument("edge list: malformed header");
    if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative header");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, &line))
            throw std::invalid_argument("edge list: fewer edges than header promises");
        std::istringstream row(line);
        int u = 0, v = 0;
        if (!(row >> u >> v)) throw std::invalid_argument("edge list: malformed edge line");
        if (u >= v) throw std::invalid_argument("edge list: edges must satisfy u < v");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::vector<Rat> read_vertex_rationals(std::istream& in, int n) {
    std::vector<Rat> values(n);
    std::vector<char> seen(n, 0);
    std::string line;
    for (int i = 0; i < n; ++i) {
        if (!next_data_line(in, &line))
            throw std::invalid_argument("vertex file: fewer lines than vertices");
        std::istringstream row(line);
        int index = 0;
        std::string value;
        if (!(row >> index >> value))
            throw std::invalid_argument("vertex file: malformed line");
        if (index < 0 || index >= n || seen[index])
            throw std::invalid_argument("vertex file: bad or repeated index");
        seen[index] = 1;
        values[index] = parse_rational(value);
    }
    return values;
}

void write_vertex_rationals(std::ostream& out, const std::vector<Rat>& values) {
    for (std::size_t v = 0; v < values.size(); ++v)
        out << v << ' ' << format_rational(values[v]) << '\n';
}

WeightFunction read_weight_file(const std::string& path, std::shared_ptr<const Graph> g) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open weight file: " + path);
    auto values = read_vertex_rationals(in, g->vertex_count());
    return WeightFunction(std::move(g), std::move(values));
}

Half read_half_file(const std::string& path, const WeightFunction& wf) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open half file: " + path);
    auto values = read_vertex_rationals(in, wf.graph().vertex_count());
    return Half(wf, std::move(values));
}

void write_distribution(std::ostream& out, const HalfDistribution& dist) {
    out << "halves " << dist.halves().size() << '\n';
    for (const auto& [half, prob] : dist.halves()) {
        out << "prob " << format_rational(prob) << '\n';
        write_vertex_rationals(out, half.values());
    }
}

HalfDistribution read_distribution(std::istream& in, const WeightFunction& wf) {
    std::string line;
    if (!next_data_line(in, &line))
        throw std::invalid_argument("distribution: empty input");
    std::istringstream header(line);
    std::string tag;
    int k = 0;
    if (!(header >> tag >> k) || tag != "halves" || k <= 0)
        throw std::invalid_argument("distribution: malformed header");
    std::vector<std::pair<Half, Rat>> items;
    for (int i = 0; i < k; ++i) {
        if (!next_data_line(in, &line))
            throw std::invalid_argument("distribution: missing prob line");
        std::istringstream row(line);
        std::string prob_tag, prob_value;
        if (!(row >> prob_tag >> prob_value) || prob_tag != "prob")
            throw std::invalid_argument("distribution: malformed prob line");
        auto values = read_vertex_rationals(in, wf.graph().vertex_count());
        items.emplace_back(Half(wf, std::move(values)), parse_rational(prob_value));
    }
    return HalfDistribution(std::move(items));
}

void write_homomorphism(std::ostream& out, const Homomorphism& phi) {
    out << phi.source().vertex_count() << ' ' << phi.target().vertex_count() << '\n';
    for (int v = 0; v < phi.source().vertex_count(); ++v)
        out << v << ' ' << phi.image(v) << '\n';
}

Homomorphism read_homomorphism(std::istream& in, std::shared_ptr<const Graph> source,
                               std::shared_ptr<const Graph> target) {
    std::string line;
    if (!next_data_line(in, &line))
        throw std::invalid_argument("homomorphism: empty input");
    std::istringstream header(line);
    int ns = 0, nt = 0;
    if (!(header >> ns >> nt)) throw std::invalid_argument("homomorphism: malformed header");
    if (ns != source->vertex_count() || nt != target->vertex_count())
        throw std::invalid_argument("homomorphism: header does not match the graphs");
    std::vector<int> map(ns, -1);
    for (int i = 0; i < ns; ++i) {
        if (!next_data_line(in, &line))
            throw std::invalid_argument("homomorphism: fewer lines than vertices");
        std::istringstream row(line);
        int v = 0, image = 0;
        if (!(row >> v >> image))
            throw std::invalid_argument("homomorphism: malformed line");
        if (v < 0 || v >= ns || map[v] >= 0)
            throw std::invalid_argument("homomorphism: bad or repeated vertex");
        map[v] = image;
    }
    return Homomorphism(std::move(source), std::move(target), std::move(map));
}

Graph graph_from_generator_name(const std::string& name) {
    if (name == "petersen") return make_petersen();
    if (name == "c5") return make_c5();
    if (name == "pstar") return star_extension(make_petersen()).extension;
    if (name.rfind("fd:", 0) == 0) {
        const int d = std::stoi(name.substr(3));
        return make_fd(d);
    }
    if (name.rfind("blowup:", 0) == 0) {
        const auto rest = name.substr(7);
        const auto colon = rest.rfind(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("generator: blowup needs a sizes list");
        const Graph base = graph_from_generator_name(rest.substr(0, colon));
        std::vector<int> sizes;
        std::istringstream sizes_in(rest.substr(colon + 1));
        std::string token;
        while (std::getline(sizes_in, token, ',')) sizes.push_back(std::stoi(token));
        return blowup(base, sizes).graph;
    }
    throw std::invalid_argument("unknown generator name: " + name);
}

}  // namespace sparsehalf
