#include "vanhom/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vanhom/builders.hpp"
#include "vanhom/document.hpp"
#include "vanhom/errors.hpp"
#include "vanhom/thinness.hpp"
#include "vanhom/vanishing.hpp"

namespace vanhom::cli {

using json = nlohmann::ordered_json;

namespace {

struct DegreeRange {
    int low = 0;
    int high = 0;
};

std::optional<DegreeRange> parse_degrees(const std::string& text) {
    if (text.empty()) return std::nullopt;
    try {
        const auto dots = text.find("..");
        if (dots == std::string::npos) {
            const int j = std::stoi(text);
            return DegreeRange{j, j};
        }
        DegreeRange r{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
        if (r.high < r.low) throw ParseError("empty degree range '" + text + "'");
        return r;
    } catch (const std::logic_error&) {
        throw ParseError("invalid degree range '" + text + "', expected a..b");
    }
}

bool in_range(const std::optional<DegreeRange>& r, int j) { return !r || (j >= r->low && j <= r->high); }

ExtRational precision_cap() {
    const char* env = std::getenv("VANHOM_PRECISION");
    if (env == nullptr || *env == '\0') return ExtRational::infinity();
    return ExtRational::parse(env);
}

struct Loaded {
    ComplexDocument doc;
    RateAnnotation rates;
};

Loaded load(const std::string& path, std::ostream& err) {
    Loaded l{load_document(path), {}};
    std::vector<std::string> warnings;
    l.rates = resolve_rates(l.doc, precision_cap(), &warnings);
    for (const auto& w : warnings) err << "warning: " << w << "\n";
    return l;
}

const CellSet& named_subcomplex(const ComplexDocument& doc, const std::string& name) {
    auto it = doc.subcomplexes.find(name);
    if (it == doc.subcomplexes.end()) throw InvalidInput("document has no subcomplex named '" + name + "'");
    return it->second;
}

json dims_object(const std::vector<std::size_t>& dims, const std::optional<DegreeRange>& range = std::nullopt) {
    json obj = json::object();
    for (std::size_t j = 0; j < dims.size(); ++j) {
        if (in_range(range, static_cast<int>(j))) obj[std::to_string(j)] = dims[j];
    }
    return obj;
}

void write_dims_tsv(std::ostream& out, const std::vector<std::size_t>& dims,
                    const std::optional<DegreeRange>& range = std::nullopt) {
    out << "degree\tdimension\n";
    for (std::size_t j = 0; j < dims.size(); ++j) {
        if (in_range(range, static_cast<int>(j))) out << j << "\t" << dims[j] << "\n";
    }
}

void check_format(const std::string& format) {
    if (format != "json" && format != "tsv") throw ParseError("unknown format '" + format + "', expected json or tsv");
}

void emit_document(const ComplexDocument& doc, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << dump_document(doc);
    } else {
        save_document(doc, path);
    }
}

std::string rational_name(const Rational& r) { return r.str(); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact vanishing homology of collapsing families", "vanhom"};
    app.require_subcommand(1);

    std::string file;
    std::string velocity_text;
    std::string degrees_text;
    std::string format = "json";
    std::string sub_a;
    std::string sub_w;
    bool use_oracle = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check a complex document");
    validate_cmd->add_option("file", file, "Complex document")->required();

    auto* rates_cmd = app.add_subcommand("rates", "Per-cell collapse rates");
    rates_cmd->add_option("file", file, "Complex document")->required();
    rates_cmd->add_option("--format", format, "json or tsv");

    auto* compute_cmd = app.add_subcommand("compute", "Vanishing Betti numbers for one velocity");
    compute_cmd->add_option("file", file, "Complex document")->required();
    compute_cmd->add_option("--velocity", velocity_text, "T^q or >T^q")->required();
    compute_cmd->add_option("--degrees", degrees_text, "Degree range a..b");
    compute_cmd->add_flag("--oracle", use_oracle, "Use the Delta' chain complex instead of the filtration");
    compute_cmd->add_option("--format", format, "json or tsv");

    auto* sweep_cmd = app.add_subcommand("sweep", "Vanishing Betti numbers across all velocities");
    sweep_cmd->add_option("file", file, "Complex document")->required();
    sweep_cmd->add_option("--degrees", degrees_text, "Degree range a..b");
    sweep_cmd->add_option("--format", format, "json or tsv");

    auto* euler_cmd = app.add_subcommand("euler", "Metric Euler characteristic");
    euler_cmd->add_option("file", file, "Complex document")->required();
    euler_cmd->add_option("--velocity", velocity_text, "T^q or >T^q")->required();
    euler_cmd->add_option("--format", format, "json or tsv");

    auto* relative_cmd = app.add_subcommand("relative", "Vanishing homology of a pair");
    relative_cmd->add_option("file", file, "Complex document")->required();
    relative_cmd->add_option("--subcomplex", sub_a, "Name of A in the document")->required();
    relative_cmd->add_option("--velocity", velocity_text, "T^q or >T^q")->required();
    relative_cmd->add_option("--format", format, "json or tsv");

    auto* excise_cmd = app.add_subcommand("excise", "Compare H(X;A) with H(X-W;A-W)");
    excise_cmd->add_option("file", file, "Complex document")->required();
    excise_cmd->add_option("--subcomplex", sub_a, "Name of A in the document")->required();
    excise_cmd->add_option("--excise", sub_w, "Name of W in the document")->required();
    excise_cmd->add_option("--velocity", velocity_text, "T^q or >T^q")->required();

    auto* les_cmd = app.add_subcommand("les", "Exactness of the long exact sequence of a pair");
    les_cmd->add_option("file", file, "Complex document")->required();
    les_cmd->add_option("--subcomplex", sub_a, "Name of A in the document")->required();
    les_cmd->add_option("--velocity", velocity_text, "T^q or >T^q")->required();

    auto* example_cmd = app.add_subcommand("example", "Write a built-in example complex");
    example_cmd->require_subcommand(1);
    std::string p_text = "0";
    std::string q_text = "2";
    std::string r_text = "2";
    std::string rate_text = "2";
    int n = 3;
    std::string output;
    bool with_geometry = false;
    auto* torus_cmd = example_cmd->add_subcommand("torus", "Product torus with circle radii T^p and T^q");
    torus_cmd->add_option("--p", p_text, "Exponent of the first radius");
    torus_cmd->add_option("--q", q_text, "Exponent of the second radius");
    torus_cmd->add_option("--n", n, "Vertices per circle");
    torus_cmd->add_option("-o,--output", output, "Output file (default stdout)");
    torus_cmd->add_flag("--geometry", with_geometry, "Emit Puiseux coordinates instead of rates");
    auto* pinched_cmd = example_cmd->add_subcommand("pinched", "Two spheres glued along a circle of radius T^r");
    pinched_cmd->add_option("--r", r_text, "Exponent of the equator radius");
    pinched_cmd->add_option("--n", n, "Vertices per ring");
    pinched_cmd->add_option("-o,--output", output, "Output file (default stdout)");
    pinched_cmd->add_flag("--geometry", with_geometry, "Emit Puiseux coordinates instead of rates");
    auto* circle_cmd = example_cmd->add_subcommand("circle", "Polygon with uniform edge rate");
    circle_cmd->add_option("--n", n, "Number of vertices");
    circle_cmd->add_option("--rate", rate_text, "Edge rate (rational or inf)");
    circle_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        check_format(format);
        const bool tsv = format == "tsv";

        if (*validate_cmd) {
            const ComplexDocument doc = load_document(file);
            ValidationReport report = validate(doc.complex);
            if (report.ok) {
                try {
                    resolve_rates(doc, precision_cap());
                } catch (const Error& e) {
                    report = {false, e.what()};
                }
            }
            if (report.ok) {
                for (const auto& [name, set] : doc.subcomplexes) {
                    if (!is_face_closed(doc.complex, set)) {
                        report = {false, "subcomplex '" + name + "' is not face-closed"};
                        break;
                    }
                }
            }
            json result;
            result["name"] = doc.name;
            result["ok"] = report.ok;
            result["message"] = report.message;
            result["f_vector"] = doc.complex.f_vector();
            result["euler_characteristic"] = doc.complex.euler_characteristic();
            out << result.dump(2) << "\n";
            if (!report.ok) {
                err << "invalid complex: " << report.message << "\n";
                return kInputError;
            }
            return kOk;
        }

        if (*rates_cmd) {
            const Loaded l = load(file, err);
            if (tsv) {
                out << "id\tdim\trate\n";
                for (const auto& [id, rate] : l.rates) out << id << "\t" << l.doc.complex.cell(id).dim << "\t" << rate << "\n";
            } else {
                json rates = json::object();
                for (const auto& [id, rate] : l.rates) rates[std::to_string(id.value)] = rate.str();
                json crit = json::array();
                for (const auto& r : critical_rates(l.doc.complex, l.rates)) crit.push_back(r.str());
                out << json{{"name", l.doc.name}, {"rates", rates}, {"critical_rates", crit}}.dump(2) << "\n";
            }
            return kOk;
        }

        if (*compute_cmd || *euler_cmd) {
            const Loaded l = load(file, err);
            const Velocity v = Velocity::parse(velocity_text);
            const auto range = parse_degrees(degrees_text);
            const VanishingBettiTable t = use_oracle ? vanishing_betti_oracle(l.doc.complex, l.rates, v)
                                                     : vanishing_betti(l.doc.complex, l.rates, v);
            if (*euler_cmd) {
                if (tsv) {
                    out << "euler\n" << t.euler << "\n";
                } else {
                    out << json{{"velocity", v.str()}, {"euler", t.euler}}.dump(2) << "\n";
                }
            } else if (tsv) {
                write_dims_tsv(out, t.dims, range);
            } else {
                out << json{{"velocity", v.str()}, {"betti", dims_object(t.dims, range)}, {"euler", t.euler}}.dump(2)
                    << "\n";
            }
            return kOk;
        }

        if (*sweep_cmd) {
            const Loaded l = load(file, err);
            std::vector<int> degrees;
            if (const auto range = parse_degrees(degrees_text)) {
                for (int j = range->low; j <= range->high; ++j) degrees.push_back(j);
            }
            const SweepTable table = sweep(l.doc.complex, l.rates, degrees);
            auto bound = [](const std::optional<Rational>& r, const char* inf) { return r ? r->str() : std::string(inf); };
            if (tsv) {
                out << "degree\tlower\tupper\tdimension\n";
                for (const auto& [j, intervals] : table.degrees) {
                    for (const auto& iv : intervals) {
                        out << j << "\t" << bound(iv.lower, "-inf") << "\t" << bound(iv.upper, "inf") << "\t"
                            << iv.dimension << "\n";
                    }
                }
            } else {
                json degrees_obj = json::object();
                for (const auto& [j, intervals] : table.degrees) {
                    json list = json::array();
                    for (const auto& iv : intervals) {
                        list.push_back({{"lower", bound(iv.lower, "-inf")},
                                        {"upper", bound(iv.upper, "inf")},
                                        {"dimension", iv.dimension}});
                    }
                    degrees_obj[std::to_string(j)] = std::move(list);
                }
                out << json{{"degrees", degrees_obj}}.dump(2) << "\n";
            }
            return kOk;
        }

        if (*relative_cmd) {
            const Loaded l = load(file, err);
            const Velocity v = Velocity::parse(velocity_text);
            const PairReport r = relative_vanishing(l.doc.complex, l.rates, named_subcomplex(l.doc, sub_a), v);
            if (tsv) {
                out << "degree\tabsolute\trelative\tboundary\n";
                for (std::size_t j = 0; j < r.absolute.size(); ++j) {
                    out << j << "\t" << r.absolute[j] << "\t" << r.relative[j] << "\t" << r.boundary[j] << "\n";
                }
            } else {
                out << json{{"velocity", v.str()},
                            {"subcomplex", sub_a},
                            {"absolute", dims_object(r.absolute)},
                            {"relative", dims_object(r.relative)},
                            {"boundary", dims_object(r.boundary)},
                            {"exact", r.exact}}
                           .dump(2)
                    << "\n";
            }
            return kOk;
        }

        if (*excise_cmd) {
            const Loaded l = load(file, err);
            const Velocity v = Velocity::parse(velocity_text);
            const ExcisionReport r = excision_check(l.doc.complex, l.rates, named_subcomplex(l.doc, sub_a),
                                                    named_subcomplex(l.doc, sub_w), v);
            out << json{{"velocity", v.str()},
                        {"full", dims_object(r.full)},
                        {"excised", dims_object(r.excised)},
                        {"equal", r.equal}}
                       .dump(2)
                << "\n";
            return kOk;
        }

        if (*les_cmd) {
            const Loaded l = load(file, err);
            const Velocity v = Velocity::parse(velocity_text);
            const ExactnessReport r = les_check(l.doc.complex, l.rates, named_subcomplex(l.doc, sub_a), v);
            json nodes = json::array();
            for (const auto& node : r.nodes) {
                nodes.push_back({{"group", node.group},
                                 {"degree", node.degree},
                                 {"dimension", node.dimension},
                                 {"rank_in", node.rank_in},
                                 {"rank_out", node.rank_out},
                                 {"exact", node.exact}});
            }
            out << json{{"velocity", v.str()}, {"exact", r.exact}, {"nodes", nodes}}.dump(2) << "\n";
            return kOk;
        }

        if (*torus_cmd) {
            const Rational p = Rational::parse(p_text);
            const Rational q = Rational::parse(q_text);
            const std::string name =
                "torus(p=" + rational_name(p) + ",q=" + rational_name(q) + ",n=" + std::to_string(n) + ")";
            emit_document(with_geometry ? document_from(torus_geometry(p, q, n), name)
                                        : document_from(build_torus(p, q, n), name),
                          output, out);
            return kOk;
        }
        if (*pinched_cmd) {
            const Rational r = Rational::parse(r_text);
            const std::string name = "pinched_spheres(r=" + rational_name(r) + ",n=" + std::to_string(n) + ")";
            const PinchedSpheres ps = build_pinched_spheres(r, n);
            ComplexDocument doc = with_geometry ? document_from(pinched_spheres_geometry(r, n), name)
                                                : document_from(AnnotatedComplex{ps.complex, ps.rates}, name);
            doc.subcomplexes["A"] = ps.equator;
            emit_document(doc, output, out);
            return kOk;
        }
        if (*circle_cmd) {
            const ExtRational rate = ExtRational::parse(rate_text);
            emit_document(document_from(build_circle(n, rate), "circle(n=" + std::to_string(n) + ",rate=" +
                                                                     rate.str() + ")"),
                          output, out);
            return kOk;
        }
    } catch (const IndeterminateAtPrecision& e) {
        err << "precision error: " << e.what() << "\n";
        return kPrecisionError;
    } catch (const NotFaceClosed& e) {
        err << "precondition violated: " << e.what() << "\n";
        return kPreconditionError;
    } catch (const NotNested& e) {
        err << "precondition violated: " << e.what() << "\n";
        return kPreconditionError;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return kPreconditionError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace vanhom::cli
