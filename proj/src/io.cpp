#include "webcalc/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace webcalc {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::invalid_argument(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

double number(const Json& j, const std::string& where) {
    if (!j.is_number()) fail(where, "expected a number");
    return j.get<double>();
}

Point point(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) fail(where, "expected [x, y]");
    return {number(j[0], where + "[0]"), number(j[1], where + "[1]")};
}

}  // namespace

WebGraph web_from_json(const Json& j) {
    WebGraph g;
    const Json& n = field(j, "n", "web");
    if (!n.is_number_integer()) fail("web.n", "expected an integer");
    g.n = n.get<int>();
    const Json& bd = field(j, "boundary", "web");
    if (!bd.is_array()) fail("web.boundary", "expected an array");
    for (std::size_t i = 0; i < bd.size(); ++i) {
        std::string w = "web.boundary[" + std::to_string(i) + "]";
        const Json& id = field(bd[i], "id", w);
        if (!id.is_string()) fail(w + ".id", "expected a string");
        g.boundary.push_back({id.get<std::string>(), number(field(bd[i], "x", w), w + ".x")});
        if (i > 0 && !(g.boundary[i].x > g.boundary[i - 1].x)) fail(w, "boundary must be sorted by x");
    }
    const Json& in = field(j, "interior", "web");
    if (!in.is_array()) fail("web.interior", "expected an array");
    for (std::size_t i = 0; i < in.size(); ++i) {
        std::string w = "web.interior[" + std::to_string(i) + "]";
        const Json& id = field(in[i], "id", w);
        if (!id.is_string()) fail(w + ".id", "expected a string");
        g.interior.push_back({id.get<std::string>(), number(field(in[i], "x", w), w + ".x"),
                              number(field(in[i], "y", w), w + ".y")});
    }
    const Json& ed = field(j, "edges", "web");
    if (!ed.is_array()) fail("web.edges", "expected an array");
    for (std::size_t i = 0; i < ed.size(); ++i) {
        std::string w = "web.edges[" + std::to_string(i) + "]";
        Edge e;
        const Json& id = field(ed[i], "id", w);
        if (!id.is_string()) fail(w + ".id", "expected a string");
        e.id = id.get<std::string>();
        for (auto [key, dst] : {std::pair{"tail", &e.tail}, std::pair{"head", &e.head}}) {
            const Json& v = field(ed[i], key, w);
            if (v.is_string())
                *dst = v.get<std::string>();
            else if (!v.is_null())
                fail(w + "." + key, "expected a vertex id or null");
        }
        const Json& wt = field(ed[i], "weight", w);
        if (!wt.is_number_integer()) fail(w + ".weight", "expected an integer");
        e.weight = wt.get<int>();
        auto via = ed[i].find("via");
        if (via != ed[i].end()) {
            if (!via->is_array()) fail(w + ".via", "expected an array of points");
            for (std::size_t k = 0; k < via->size(); ++k)
                e.via.push_back(point((*via)[k], w + ".via[" + std::to_string(k) + "]"));
        }
        g.edges.push_back(std::move(e));
    }
    return g;
}

Json web_to_json(const WebGraph& g) {
    Json j;
    j["n"] = g.n;
    j["boundary"] = Json::array();
    for (const auto& b : g.boundary) j["boundary"].push_back({{"id", b.id}, {"x", b.x}});
    j["interior"] = Json::array();
    for (const auto& v : g.interior) j["interior"].push_back({{"id", v.id}, {"x", v.x}, {"y", v.y}});
    j["edges"] = Json::array();
    for (const auto& e : g.edges) {
        Json via = Json::array();
        for (const auto& p : e.via) via.push_back({p.x, p.y});
        Json je;
        je["id"] = e.id;
        je["tail"] = e.is_loop() ? Json(nullptr) : Json(e.tail);
        je["head"] = e.is_loop() ? Json(nullptr) : Json(e.head);
        je["weight"] = e.weight;
        je["via"] = via;
        j["edges"].push_back(je);
    }
    return j;
}

Stranding stranding_from_json(const WebGraph& g, const Json& j) {
    const Json& labels = field(j, "labels", "stranding");
    if (!labels.is_object()) fail("stranding.labels", "expected an object");
    Stranding s;
    s.labels.assign(g.edges.size(), Word{g.n, 0});
    std::vector<char> seen(g.edges.size(), 0);
    for (const auto& [id, bits] : labels.items()) {
        int e;
        try {
            e = edge_index(g, id);
        } catch (const std::invalid_argument&) {
            fail("stranding.labels." + id, "unknown edge");
        }
        if (!bits.is_string()) fail("stranding.labels." + id, "expected a bit string");
        Word w = Word::from_string(bits.get<std::string>());
        if (w.n != g.n) fail("stranding.labels." + id, "word length differs from n");
        s.labels[e] = w;
        seen[e] = 1;
    }
    for (std::size_t e = 0; e < seen.size(); ++e)
        if (!seen[e]) fail("stranding.labels", "missing label for edge '" + g.edges[e].id + "'");
    return s;
}

Json stranding_to_json(const WebGraph& g, const Stranding& s) {
    Json labels = Json::object();
    for (std::size_t e = 0; e < g.edges.size(); ++e) labels[g.edges[e].id] = s.labels[e].str();
    return {{"labels", labels}};
}

Json vector_to_json(const WebVector& v) {
    Json out = Json::array();
    for (const auto& [m, c] : v.terms()) {
        Json fs = Json::array();
        for (const auto& f : m) fs.push_back({{"bits", f.word.str()}, {"dual", f.dual}});
        out.push_back({{"factors", fs}, {"coeff", c.str()}});
    }
    return out;
}

WebVector vector_from_json(const Json& j) {
    if (!j.is_array()) fail("vector", "expected an array");
    WebVector v;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string w = "vector[" + std::to_string(i) + "]";
        Monomial m;
        const Json& fs = field(j[i], "factors", w);
        if (!fs.is_array()) fail(w + ".factors", "expected an array");
        for (const auto& f : fs) {
            const Json& bits = field(f, "bits", w);
            if (!bits.is_string()) fail(w + ".bits", "expected a bit string");
            bool dual = f.contains("dual") && f["dual"].get<bool>();
            m.push_back({Word::from_string(bits.get<std::string>()), dual});
        }
        const Json& c = field(j[i], "coeff", w);
        if (!c.is_string()) fail(w + ".coeff", "expected a string");
        v.add(m, LaurentPoly::parse(c.get<std::string>()));
    }
    return v;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << text;
}

}  // namespace webcalc
