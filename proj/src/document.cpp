#include "vanhom/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vanhom/errors.hpp"
#include "vanhom/thinness.hpp"

namespace vanhom {

using json = nlohmann::ordered_json;

namespace {

CellId parse_id(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 0xFFFFFFFFLL) {
        throw ParseError(std::string(what) + " must be a nonnegative integer id");
    }
    return CellId{static_cast<std::uint32_t>(j.get<long long>())};
}

std::string rate_text(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ParseError("cell rate must be a string (rational or \"inf\") or an integer");
}

const json& require(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string("missing key \"") + key + "\"");
    return *it;
}

// Vertices spanned by the closure of a cell.
std::vector<CellId> closure_vertices(const CellComplex& c, CellId id) {
    std::vector<CellId> out;
    for (CellId x : face_closure(c, {id})) {
        if (c.cell(x).dim == 0) out.push_back(x);
    }
    return out;
}

}  // namespace

ComplexDocument parse_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("complex document must be a JSON object");
    const json& format = require(root, "format");
    if (!format.is_string() || format.get<std::string>() != kDocumentFormat) {
        throw ParseError("unsupported format tag, expected \"" + std::string(kDocumentFormat) + "\"");
    }
    ComplexDocument doc;
    if (auto it = root.find("name"); it != root.end()) {
        if (!it->is_string()) throw ParseError("\"name\" must be a string");
        doc.name = it->get<std::string>();
    }
    const json& cells = require(root, "cells");
    if (!cells.is_array()) throw ParseError("\"cells\" must be an array");
    for (const json& entry : cells) {
        if (!entry.is_object()) throw ParseError("cell entries must be objects");
        Cell cell;
        cell.id = parse_id(require(entry, "id"), "cell id");
        const json& dim = require(entry, "dim");
        if (!dim.is_number_integer() || dim.get<int>() < 0) throw ParseError("cell dim must be a nonnegative integer");
        cell.dim = dim.get<int>();
        if (auto b = entry.find("boundary"); b != entry.end()) {
            if (!b->is_array()) throw ParseError("cell boundary must be an array");
            for (const json& pair : *b) {
                if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer()) {
                    throw ParseError("boundary entries must be [coefficient, faceId] pairs");
                }
                cell.boundary.push_back({pair[0].get<long>(), parse_id(pair[1], "face id")});
            }
        }
        if (auto l = entry.find("label"); l != entry.end()) {
            if (!l->is_string()) throw ParseError("cell label must be a string");
            cell.label = l->get<std::string>();
        }
        if (auto r = entry.find("rate"); r != entry.end() && !r->is_null()) {
            doc.rates[cell.id] = ExtRational::parse(rate_text(*r));
        }
        doc.complex.add_cell(std::move(cell));
    }
    if (auto g = root.find("geometry"); g != root.end() && !g->is_null()) {
        VertexGeometry geometry;
        const json& ambient = require(*g, "ambient_dim");
        if (!ambient.is_number_integer() || ambient.get<int>() < 1) throw ParseError("ambient_dim must be positive");
        geometry.ambient_dim = ambient.get<int>();
        const json& vertices = require(*g, "vertices");
        if (!vertices.is_object()) throw ParseError("geometry vertices must be an object keyed by id");
        for (const auto& [key, coords] : vertices.items()) {
            CellId id;
            try {
                id = parse_id(json(std::stoll(key)), "vertex id");
            } catch (const std::logic_error&) {
                throw ParseError("vertex key '" + key + "' is not an id");
            }
            if (!coords.is_array() || coords.size() != static_cast<std::size_t>(geometry.ambient_dim)) {
                throw ParseError("vertex " + key + " needs " + std::to_string(geometry.ambient_dim) + " coordinates");
            }
            std::vector<PuiseuxSeries> point;
            for (const json& x : coords) {
                if (!x.is_string()) throw ParseError("coordinates must be series strings");
                point.push_back(PuiseuxSeries::parse(x.get<std::string>()));
            }
            geometry.vertices[id] = std::move(point);
        }
        doc.geometry = std::move(geometry);
    }
    if (auto s = root.find("subcomplexes"); s != root.end() && !s->is_null()) {
        if (!s->is_object()) throw ParseError("\"subcomplexes\" must be an object");
        for (const auto& [name, ids] : s->items()) {
            if (!ids.is_array()) throw ParseError("subcomplex " + name + " must be an array of ids");
            CellSet set;
            for (const json& id : ids) set.insert(parse_id(id, "subcomplex id"));
            doc.subcomplexes[name] = std::move(set);
        }
    }
    return doc;
}

ComplexDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

std::string dump_document(const ComplexDocument& doc) {
    json root;
    root["format"] = kDocumentFormat;
    root["name"] = doc.name;
    json cells = json::array();
    for (const auto& [id, cell] : doc.complex.cells()) {
        json entry;
        entry["id"] = id.value;
        entry["dim"] = cell.dim;
        json boundary = json::array();
        for (const auto& inc : cell.boundary) boundary.push_back(json::array({inc.coefficient, inc.face.value}));
        entry["boundary"] = std::move(boundary);
        if (auto r = doc.rates.find(id); r != doc.rates.end()) entry["rate"] = r->second.str();
        if (cell.label) entry["label"] = *cell.label;
        cells.push_back(std::move(entry));
    }
    root["cells"] = std::move(cells);
    if (doc.geometry) {
        json vertices = json::object();
        for (const auto& [id, coords] : doc.geometry->vertices) {
            json point = json::array();
            for (const auto& x : coords) point.push_back(x.str());
            vertices[std::to_string(id.value)] = std::move(point);
        }
        root["geometry"] = {{"ambient_dim", doc.geometry->ambient_dim}, {"vertices", std::move(vertices)}};
    }
    if (!doc.subcomplexes.empty()) {
        json subs = json::object();
        for (const auto& [name, set] : doc.subcomplexes) {
            json ids = json::array();
            for (CellId id : set) ids.push_back(id.value);
            subs[name] = std::move(ids);
        }
        root["subcomplexes"] = std::move(subs);
    }
    return root.dump(2) + "\n";
}

void save_document(const ComplexDocument& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out << dump_document(doc);
}

RateAnnotation resolve_rates(const ComplexDocument& doc, const ExtRational& precision_cap,
                             std::vector<std::string>* warnings) {
    std::optional<GeometricComplex> g;
    if (doc.geometry) {
        g.emplace();
        g->ambient_dim = doc.geometry->ambient_dim;
        for (const auto& [id, coords] : doc.geometry->vertices) {
            std::vector<PuiseuxSeries> capped;
            for (const auto& x : coords) capped.push_back(x.truncated(precision_cap));
            g->vertices[id] = std::move(capped);
        }
    }
    RateAnnotation out;
    for (const auto& [id, cell] : doc.complex.cells()) {
        if (cell.dim == 0) continue;
        auto explicit_rate = doc.rates.find(id);
        if (explicit_rate != doc.rates.end()) {
            out[id] = explicit_rate->second;
            if (g && warnings) {
                warnings->push_back("cell " + std::to_string(id.value) + ": explicit rate " +
                                    explicit_rate->second.str() + " overrides geometry");
            }
            continue;
        }
        if (!g) throw MissingRate("cell " + std::to_string(id.value) + " has no rate and the document has no geometry");
        const std::vector<CellId> tuple = closure_vertices(doc.complex, id);
        if (tuple.size() != static_cast<std::size_t>(cell.dim) + 1) {
            throw InvalidInput("cell " + std::to_string(id.value) + " is not a simplex; geometry cannot rate it");
        }
        out[id] = simplex_rate(*g, tuple);
    }
    return out;
}

ComplexDocument document_from(const AnnotatedComplex& ac, std::string name) {
    ComplexDocument doc;
    doc.name = std::move(name);
    doc.complex = ac.complex;
    doc.rates = ac.rates;
    return doc;
}

ComplexDocument document_from(const GeometricComplex& g, std::string name) {
    std::vector<CellId> vertices;
    for (const auto& [id, coords] : g.vertices) vertices.push_back(id);
    ComplexDocument doc;
    doc.name = std::move(name);
    doc.complex = build_simplicial(vertices, g.simplices).complex;
    doc.geometry = VertexGeometry{g.ambient_dim, g.vertices};
    return doc;
}

}  // namespace vanhom
