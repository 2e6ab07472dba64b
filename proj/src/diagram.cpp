#include "shadowsum/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"
#include "shadowsum/recoupling.hpp"

namespace shadowsum {

using nlohmann::json;

int Shadow::face_index(const std::string& id) const {
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (faces[i].id == id) return static_cast<int>(i);
    return -1;
}

long Shadow::total_twice_gleam() const {
    long t = 0;
    for (const auto& f : faces) t += f.twice_gleam;
    return t;
}

bool Shadow::has_odd_twice_gleam() const {
    return std::any_of(faces.begin(), faces.end(), [](const Face& f) { return f.twice_gleam % 2 != 0; });
}

int Shadow::max_edge_color() const {
    int k = 0;
    for (const auto& e : edges) k = std::max(k, e.color);
    return k;
}

bool Shadow::has_pinned_faces() const {
    return std::any_of(faces.begin(), faces.end(), [](const Face& f) { return f.boundary; });
}

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) parse_fail(where, "expected an object");
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) parse_fail(where, "unknown field '" + key + "'");
    }
}

const json& need(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) parse_fail(where, std::string("missing field '") + key + "'");
    return *it;
}

int as_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) parse_fail(where, "expected an integer");
    auto x = v.get<long long>();
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) parse_fail(where, "integer out of range");
    return static_cast<int>(x);
}

std::string as_string(const json& v, const std::string& where) {
    if (!v.is_string()) parse_fail(where, "expected a string");
    return v.get<std::string>();
}

bool as_bool(const json& v, const std::string& where) {
    if (!v.is_boolean()) parse_fail(where, "expected a boolean");
    return v.get<bool>();
}

}  // namespace

Shadow parse_shadow(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
    }
    only_keys(doc, "document", {"surface", "faces", "edges", "vertices"});

    Shadow s;
    const json& surf = need(doc, "surface", "document");
    only_keys(surf, "surface", {"genus", "boundary"});
    s.surface.genus = as_int(need(surf, "genus", "surface"), "surface.genus");
    s.surface.boundary = as_int(need(surf, "boundary", "surface"), "surface.boundary");

    const json& faces = need(doc, "faces", "document");
    if (!faces.is_array()) parse_fail("faces", "expected a list");
    int given_gleams = 0;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        std::string where = "faces[" + std::to_string(i) + "]";
        const json& f = faces[i];
        only_keys(f, where, {"id", "euler_char", "boundary", "twice_gleam"});
        Face face;
        face.id = as_string(need(f, "id", where), where + ".id");
        if (s.face_index(face.id) >= 0) parse_fail(where, "duplicate face id '" + face.id + "'");
        face.euler_char = as_int(need(f, "euler_char", where), where + ".euler_char");
        if (f.contains("boundary")) face.boundary = as_bool(f["boundary"], where + ".boundary");
        if (f.contains("twice_gleam")) {
            face.twice_gleam = as_int(f["twice_gleam"], where + ".twice_gleam");
            ++given_gleams;
        }
        s.faces.push_back(face);
    }

    auto face_ref = [&](const json& v, const std::string& where) {
        std::string id = as_string(v, where);
        int k = s.face_index(id);
        if (k < 0) parse_fail(where, "unknown face '" + id + "'");
        return k;
    };

    const json& edges = need(doc, "edges", "document");
    if (!edges.is_array()) parse_fail("edges", "expected a list");
    std::set<std::string> edge_ids;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::string where = "edges[" + std::to_string(i) + "]";
        const json& e = edges[i];
        only_keys(e, where, {"id", "color", "faces", "circle"});
        Edge edge;
        edge.id = as_string(need(e, "id", where), where + ".id");
        if (!edge_ids.insert(edge.id).second) parse_fail(where, "duplicate edge id '" + edge.id + "'");
        edge.color = as_int(need(e, "color", where), where + ".color");
        const json& fs = need(e, "faces", where);
        if (!fs.is_array() || fs.size() != 2) parse_fail(where + ".faces", "expected two face ids");
        edge.faces = {face_ref(fs[0], where + ".faces[0]"), face_ref(fs[1], where + ".faces[1]")};
        if (e.contains("circle")) edge.circle = as_bool(e["circle"], where + ".circle");
        s.edges.push_back(edge);
    }

    bool link_records = false, shadow_records = false;
    if (doc.contains("vertices")) {
        const json& vs = doc["vertices"];
        if (!vs.is_array()) parse_fail("vertices", "expected a list");
        std::set<std::string> vertex_ids;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            std::string where = "vertices[" + std::to_string(i) + "]";
            const json& v = vs[i];
            only_keys(v, where, {"id", "corners", "over_color", "under_color", "k", "l"});
            Vertex vert;
            vert.id = v.contains("id") ? as_string(v["id"], where + ".id") : "v" + std::to_string(i);
            if (!vertex_ids.insert(vert.id).second) parse_fail(where, "duplicate vertex id '" + vert.id + "'");
            const json& cs = need(v, "corners", where);
            if (!cs.is_array() || cs.size() != 4) parse_fail(where + ".corners", "expected four face ids");
            for (int c = 0; c < 4; ++c) vert.corners[c] = face_ref(cs[c], where + ".corners[" + std::to_string(c) + "]");
            bool lk = v.contains("over_color") || v.contains("under_color");
            bool sk = v.contains("k") || v.contains("l");
            if (lk && sk) parse_fail(where, "mixes over/under colors with k/l");
            if (lk) {
                vert.over = as_int(need(v, "over_color", where), where + ".over_color");
                vert.under = as_int(need(v, "under_color", where), where + ".under_color");
                link_records = true;
            } else if (sk) {
                vert.over = as_int(need(v, "k", where), where + ".k");
                vert.under = as_int(need(v, "l", where), where + ".l");
                shadow_records = true;
            } else {
                throw MissingDecoration(where + ": no crossing or shadow colors");
            }
            s.vertices.push_back(vert);
        }
    }
    if (link_records && shadow_records) parse_fail("vertices", "mixes link-diagram and shadow vertex records");

    if (shadow_records || (!link_records && given_gleams > 0)) {
        s.kind = DiagramKind::PureShadow;
        if (given_gleams != static_cast<int>(s.faces.size()))
            parse_fail("faces", "a pure shadow needs twice_gleam on every face");
    } else {
        s.kind = DiagramKind::LinkDiagram;
        if (given_gleams > 0) parse_fail("faces", "twice_gleam is computed for link diagrams, not given");
        s = compute_gleams(std::move(s));
    }
    validate(s);
    return s;
}

Shadow load_shadow(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_shadow(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string to_json(const Shadow& s) {
    json doc;
    doc["surface"] = {{"genus", s.surface.genus}, {"boundary", s.surface.boundary}};
    doc["faces"] = json::array();
    for (const auto& f : s.faces) {
        json jf = {{"id", f.id}, {"euler_char", f.euler_char}, {"boundary", f.boundary}};
        if (s.kind == DiagramKind::PureShadow) jf["twice_gleam"] = f.twice_gleam;
        doc["faces"].push_back(jf);
    }
    doc["edges"] = json::array();
    for (const auto& e : s.edges)
        doc["edges"].push_back({{"id", e.id},
                                {"color", e.color},
                                {"faces", {s.faces[e.faces[0]].id, s.faces[e.faces[1]].id}},
                                {"circle", e.circle}});
    if (!s.vertices.empty()) {
        doc["vertices"] = json::array();
        for (const auto& v : s.vertices) {
            json cs = json::array();
            for (int c : v.corners) cs.push_back(s.faces[c].id);
            if (s.kind == DiagramKind::PureShadow)
                doc["vertices"].push_back({{"id", v.id}, {"corners", cs}, {"k", v.over}, {"l", v.under}});
            else
                doc["vertices"].push_back({{"id", v.id}, {"corners", cs}, {"over_color", v.over}, {"under_color", v.under}});
        }
    }
    return doc.dump(2);
}

void validate(const Shadow& s) {
    auto fail = [](const std::string& what) { throw ValidationError(what); };
    if (s.surface.genus < 0 || s.surface.boundary < 0) fail("surface: negative genus or boundary count");
    if (s.faces.empty()) fail("faces: at least one face is required");
    const int nf = static_cast<int>(s.faces.size());
    std::set<std::string> ids;
    for (const auto& f : s.faces)
        if (!ids.insert(f.id).second) fail("faces: duplicate id '" + f.id + "'");

    long euler = 0;
    int pinned = 0;
    for (const auto& f : s.faces) {
        euler += f.euler_char;
        if (f.euler_char > 2) fail("face '" + f.id + "': Euler characteristic above 2");
        pinned += f.boundary ? 1 : 0;
    }
    if (euler != s.surface.euler_characteristic() + static_cast<long>(s.vertices.size()))
        fail("euler: face Euler characteristics sum to " + std::to_string(euler) + ", expected " +
             std::to_string(s.surface.euler_characteristic() + static_cast<long>(s.vertices.size())));
    if (s.surface.boundary == 0 && pinned > 0) fail("boundary: closed surface with a boundary face");
    if (s.surface.boundary > 0 && (pinned == 0 || pinned > s.surface.boundary))
        fail("boundary: expected between 1 and " + std::to_string(s.surface.boundary) + " boundary faces");

    int arcs = 0;
    std::map<std::tuple<int, int, int>, int> supply;
    for (const auto& e : s.edges) {
        if (e.color < 0) fail("edge '" + e.id + "': negative color");
        if (e.faces[0] < 0 || e.faces[0] >= nf || e.faces[1] < 0 || e.faces[1] >= nf)
            fail("edge '" + e.id + "': face out of range");
        if (e.circle) continue;
        ++arcs;
        auto [a, b] = std::minmax(e.faces[0], e.faces[1]);
        supply[{a, b, e.color}] += 2;
    }
    if (arcs != 2 * static_cast<int>(s.vertices.size()))
        fail("incidence: " + std::to_string(arcs) + " non-circle edges for " + std::to_string(s.vertices.size()) +
             " four-valent vertices");
    std::map<std::tuple<int, int, int>, int> demand;
    for (const auto& v : s.vertices) {
        if (v.over < 0 || v.under < 0) fail("vertex '" + v.id + "': negative color");
        for (int c = 0; c < 4; ++c) {
            int f = v.corners[c], g = v.corners[(c + 1) % 4];
            if (f < 0 || f >= nf || g < 0 || g >= nf) fail("vertex '" + v.id + "': corner out of range");
            auto [a, b] = std::minmax(f, g);
            demand[{a, b, c % 2 == 0 ? v.under : v.over}] += 1;
        }
    }
    if (demand != supply) fail("incidence: vertex corners do not match the edge list");

    if (s.kind == DiagramKind::LinkDiagram && s.total_twice_gleam() != 0)
        fail("gleam: link diagram with nonzero total gleam");
}

Shadow compute_gleams(Shadow s) {
    if (s.kind != DiagramKind::LinkDiagram) throw MissingDecoration("compute_gleams needs crossing data");
    for (auto& f : s.faces) f.twice_gleam = 0;
    const int nf = static_cast<int>(s.faces.size());
    for (const auto& v : s.vertices)
        for (int c = 0; c < 4; ++c) {
            if (v.corners[c] < 0 || v.corners[c] >= nf) throw ValidationError("vertex '" + v.id + "': corner out of range");
            s.faces[v.corners[c]].twice_gleam += c % 2 == 0 ? -1 : 1;
        }
    return s;
}

namespace {

constexpr int kFar = std::numeric_limits<int>::max() / 4;

std::vector<std::vector<int>> face_distances(const Shadow& s) {
    const int n = static_cast<int>(s.faces.size());
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kFar));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (const auto& e : s.edges) {
        int a = e.faces[0], b = e.faces[1];
        d[a][b] = std::min(d[a][b], e.color);
        d[b][a] = std::min(d[b][a], e.color);
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

}  // namespace

int breadth(const Shadow& s) {
    auto d = face_distances(s);
    int b = 0;
    for (const auto& row : d)
        for (int x : row)
            if (x < kFar) b = std::max(b, x);
    return b;
}

std::vector<int> pinned_color_bounds(const Shadow& s) {
    auto d = face_distances(s);
    const int n = static_cast<int>(s.faces.size());
    std::vector<int> out(n, -1);
    for (int f = 0; f < n; ++f) {
        int best = kFar;
        for (int g = 0; g < n; ++g)
            if (s.faces[g].boundary) best = std::min(best, d[g][f]);
        if (best < kFar) out[f] = best;
    }
    return out;
}

bool Z2Class::is_zero() const {
    return std::all_of(bits.begin(), bits.end(), [](int b) { return b == 0; });
}

Z2Class z2_class(const Shadow& s) {
    const int n = static_cast<int>(s.faces.size());
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (edge, other face)
    for (int i = 0; i < static_cast<int>(s.edges.size()); ++i) {
        const auto& e = s.edges[i];
        adj[e.faces[0]].push_back({i, e.faces[1]});
        if (e.faces[1] != e.faces[0]) adj[e.faces[1]].push_back({i, e.faces[0]});
    }
    std::vector<int> parity(n, -1);
    std::vector<bool> tree(s.edges.size(), false);
    for (int root = 0; root < n; ++root) {
        if (parity[root] >= 0) continue;
        parity[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            for (auto [ei, g] : adj[f]) {
                if (parity[g] >= 0) continue;
                parity[g] = (parity[f] + s.edges[ei].color) % 2;
                tree[ei] = true;
                q.push(g);
            }
        }
    }
    Z2Class z;
    for (std::size_t i = 0; i < s.edges.size(); ++i) {
        if (tree[i]) continue;
        const auto& e = s.edges[i];
        z.bits.push_back((parity[e.faces[0]] + parity[e.faces[1]] + e.color) % 2);
    }
    return z;
}

bool coloring_admissible(const Shadow& s, const Coloring& c, int r) {
    if (c.size() != s.faces.size()) return false;
    for (std::size_t f = 0; f < s.faces.size(); ++f) {
        if (c[f] < 0) return false;
        if (s.faces[f].boundary && c[f] != 0) return false;
        if (r > 0 && c[f] > r - 2) return false;
    }
    for (const auto& e : s.edges)
        if (!admissible_triple(c[e.faces[0]], c[e.faces[1]], e.color, r)) return false;
    return true;
}

ColoringEnumerator::ColoringEnumerator(const Shadow& s, int r) : s_(&s), r_(r) {
    const int n = static_cast<int>(s.faces.size());
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    same_face_colors_.assign(n, -1);
    for (const auto& e : s.edges) {
        adj[e.faces[0]].push_back({e.faces[1], e.color});
        if (e.faces[0] != e.faces[1]) adj[e.faces[1]].push_back({e.faces[0], e.color});
    }
    std::vector<int> pos(n, -1);
    for (int root = 0; root < n; ++root) {
        if (pos[root] >= 0) continue;
        std::queue<int> q;
        q.push(root);
        pos[root] = static_cast<int>(order_.size());
        order_.push_back(root);
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            for (auto [g, k] : adj[f]) {
                if (pos[g] >= 0) continue;
                pos[g] = static_cast<int>(order_.size());
                order_.push_back(g);
                q.push(g);
            }
        }
    }
    checks_.assign(n, {});
    for (const auto& e : s.edges) {
        int a = e.faces[0], b = e.faces[1];
        // Attach each edge constraint to whichever face is assigned last.
        if (pos[a] < pos[b]) std::swap(a, b);
        checks_[pos[a]].push_back({b, e.color});
    }

    auto bounds = pinned_color_bounds(s);
    bool all_bounded = std::all_of(bounds.begin(), bounds.end(), [](int b) { return b >= 0; });
    if (all_bounded) max_shell_ = *std::max_element(bounds.begin(), bounds.end());
    if (r_ > 0) max_shell_ = max_shell_ < 0 ? r_ - 2 : std::min(max_shell_, r_ - 2);

    if (r_ == 0 && !s.has_pinned_faces()) {
        int u = breadth(s) + s.max_edge_color() + 1;
        std::vector<Coloring> base = shell(u);
        for (auto& c : base) {
            for (int& x : c) x = u - x;
        }
        offsets_ = std::move(base);
        stable_from_ = u;
    }
}

void ColoringEnumerator::search(int u, std::size_t p, Coloring& c, bool hit, std::vector<Coloring>& out) const {
    if (p == order_.size()) {
        if (hit) out.push_back(c);
        return;
    }
    const int f = order_[p];
    int lo = 0, hi = u, parity = -1;
    if (s_->faces[f].boundary) hi = 0;
    if (r_ > 0) hi = std::min(hi, r_ - 2);
    for (auto [g, k] : checks_[p]) {
        if (g == f) {
            if (k % 2 != 0) return;
            lo = std::max(lo, (k + 1) / 2);
            continue;
        }
        lo = std::max(lo, std::abs(c[g] - k));
        hi = std::min(hi, c[g] + k);
        int par = (c[g] + k) % 2;
        if (parity >= 0 && parity != par) return;
        parity = par;
    }
    for (int v = lo; v <= hi; ++v) {
        if (parity >= 0 && v % 2 != parity) continue;
        bool ok = true;
        for (auto [g, k] : checks_[p]) {
            int other = g == f ? v : c[g];
            if (!admissible_triple(other, v, k, r_)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        c[f] = v;
        search(u, p + 1, c, hit || v == u, out);
    }
    c[f] = -1;
}

std::vector<Coloring> ColoringEnumerator::shell(int u) const {
    std::vector<Coloring> out;
    if (u < 0 || (max_shell_ >= 0 && u > max_shell_)) return out;
    if (stable_from_ >= 0 && u >= stable_from_) {
        out.reserve(offsets_.size());
        for (const auto& d : offsets_) {
            Coloring c(d.size());
            for (std::size_t i = 0; i < d.size(); ++i) c[i] = u - d[i];
            out.push_back(std::move(c));
        }
    } else {
        Coloring c(s_->faces.size(), -1);
        search(u, 0, c, false, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Coloring> enumerate_colorings(const Shadow& s, int max_color, int r) {
    ColoringEnumerator en(s, r);
    if (r > 0) max_color = r - 2;
    std::vector<Coloring> out;
    for (int u = 0; u <= max_color; ++u) {
        auto sh = en.shell(u);
        out.insert(out.end(), sh.begin(), sh.end());
    }
    return out;
}

}  // namespace shadowsum
