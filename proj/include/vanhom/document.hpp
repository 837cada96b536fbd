#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vanhom/builders.hpp"
#include "vanhom/complex.hpp"
#include "vanhom/puiseux.hpp"

namespace vanhom {

inline constexpr std::string_view kDocumentFormat = "vanhom-complex/1";

struct VertexGeometry {
    int ambient_dim = 0;
    std::map<CellId, std::vector<PuiseuxSeries>> vertices;
};

/// On-disk complex: JSON with the "vanhom-complex/1" format tag.
///
///   {"format": "vanhom-complex/1", "name": "...",
///    "cells": [{"id": 3, "dim": 1, "boundary": [[1, 1], [-1, 0]], "rate": "2"}, ...],
///    "geometry": {"ambient_dim": 2, "vertices": {"0": ["0", "T^2"], ...}},
///    "subcomplexes": {"A": [0, 1, 3]}}
///
/// "rate" is a rational literal or "inf"; "geometry" and "subcomplexes" are
/// optional.
struct ComplexDocument {
    std::string name;
    CellComplex complex;
    RateAnnotation rates;
    std::optional<VertexGeometry> geometry;
    std::map<std::string, CellSet> subcomplexes;
};

/// Throws ParseError on malformed JSON or schema violations, InvalidInput on
/// duplicate ids.
ComplexDocument parse_document(std::string_view text);
ComplexDocument load_document(const std::string& path);

/// Deterministic serialisation (cells by id, two-space indent, trailing newline).
std::string dump_document(const ComplexDocument& doc);
void save_document(const ComplexDocument& doc, const std::string& path);

/// Rates for every cell of dimension >= 1: explicit rates win, the rest are
/// computed from the vertex geometry (coordinates truncated at
/// `precision_cap`). A warning is appended for every cell where an explicit
/// rate shadows available geometry. Throws MissingRate when neither source
/// covers a cell.
RateAnnotation resolve_rates(const ComplexDocument& doc, const ExtRational& precision_cap,
                             std::vector<std::string>* warnings = nullptr);

ComplexDocument document_from(const AnnotatedComplex& ac, std::string name);
/// Geometry-only document; all rates come from the coordinates.
ComplexDocument document_from(const GeometricComplex& g, std::string name);

}  // namespace vanhom
