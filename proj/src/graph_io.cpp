#include "vcss/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace vcss {

Multigraph load_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool got_header = false;
    int n = 0, m = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (got_header) throw ParseError(line_no, "duplicate header");
            if (!(ls >> n >> m) || n < 0 || m < 0) throw ParseError(line_no, "bad header");
            got_header = true;
            edges.reserve(m);
            continue;
        }
        if (tag == "e") {
            if (!got_header) throw ParseError(line_no, "edge before header");
            int a, b;
            if (!(ls >> a >> b)) throw ParseError(line_no, "bad edge line");
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw ParseError(line_no, "endpoint out of range");
            if (a == b) throw ParseError(line_no, "self-loop");
            edges.emplace_back(a, b);
            continue;
        }
        throw ParseError(line_no, "unknown line tag '" + tag + "'");
    }
    if (!got_header) throw ParseError(line_no, "missing header");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(line_no, "edge count mismatch: header says " + std::to_string(m) +
                                      ", got " + std::to_string(edges.size()));
    return Multigraph(n, edges);
}

std::string save_graph(const Multigraph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int e = 0; e < g.edge_count(); ++e)
        out << "e " << g.edge(e).a << " " << g.edge(e).b << "\n";
    return out.str();
}

Multigraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_graph(buf.str());
}

void save_graph_file(const Multigraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw GraphError("cannot open " + path + " for writing");
    out << save_graph(g);
}

std::string save_edge_set(const EdgeSet& s) {
    std::ostringstream out;
    for (int e : s.ids())
        out << "e " << s.host().edge(e).a << " " << s.host().edge(e).b << "\n";
    return out.str();
}

EdgeSet load_edge_set(const Multigraph& g, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    EdgeSet s(g);
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c" || tag == "p") continue;
        if (tag != "e") throw ParseError(line_no, "unknown line tag '" + tag + "'");
        int a, b;
        if (!(ls >> a >> b)) throw ParseError(line_no, "bad edge line");
        if (a < 0 || a >= g.vertex_count() || b < 0 || b >= g.vertex_count())
            throw ParseError(line_no, "endpoint out of range");
        bool placed = false;
        for (int e : g.edges_between(a, b)) {
            if (!s.contains(e)) {
                s.insert(e);
                placed = true;
                break;
            }
        }
        if (!placed) throw ParseError(line_no, "no unused edge between endpoints");
    }
    return s;
}

} // namespace vcss
