#include "tetra/wire.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace tetra::wire {

namespace {

json encode_verdict(const Verdict& v) { return {{"inside", v.inside}, {"margin", v.margin}}; }

const json& require_array(const json& j, std::size_t size, const char* what) {
    if (!j.is_array() || j.size() != size) {
        throw WireError(std::string(what) + ": expected an array of " + std::to_string(size) + " elements");
    }
    return j;
}

}  // namespace

json encode(Complex z) { return json::array({z.real(), z.imag()}); }

json encode(const TetraPoint& x) { return json::array({encode(x.x1), encode(x.x2), encode(x.x3)}); }

json encode(const TangentTarget& y) { return json::array({encode(y.y1), encode(y.y2), encode(y.y3)}); }

json encode(const Matrix2& m) {
    return json::array({encode(m.a11), encode(m.a12), encode(m.a21), encode(m.a22)});
}

json encode(const DiscAutomorphism& u) { return {{"omega", encode(u.omega)}, {"alpha", encode(u.alpha)}}; }

json encode(const TetraAutomorphism& g) {
    return {{"upsilon", encode(g.upsilon)}, {"chi", encode(g.chi)}, {"flip", g.flip}};
}

json encode(const MembershipReport& r) {
    return {{"in_e", r.inside},
            {"consensus", r.consensus},
            {"borderline", r.borderline},
            {"verdicts",
             {{"definition", encode_verdict(r.definition)},
              {"inequality", encode_verdict(r.inequality)},
              {"lft", encode_verdict(r.lft)},
              {"symmetric", encode_verdict(r.symmetric)},
              {"beta", encode_verdict(r.beta)}}}};
}

json encode(const SuiteReport& r, bool include_timing) {
    json out{{"suite", r.suite},
             {"seed", r.seed},
             {"samples_run", r.samples_run},
             {"borderline", r.borderline},
             {"clean", r.clean()},
             {"worst_deviation", r.worst_deviation}};
    json dis = json::array();
    for (const Disagreement& d : r.disagreements) {
        json item{{"index", d.index}, {"kind", d.kind}, {"x", encode(d.point)}, {"deviation", d.deviation}};
        if (d.report) {
            item["report"] = encode(*d.report);
        }
        dis.push_back(std::move(item));
    }
    out["disagreements"] = std::move(dis);
    if (!r.properties.empty()) {
        json props = json::array();
        for (const PropertyStat& p : r.properties) {
            props.push_back({{"name", p.name},
                             {"tolerance", p.tolerance},
                             {"worst", p.worst},
                             {"checks", p.checks},
                             {"violations", p.violations}});
        }
        out["properties"] = std::move(props);
    }
    if (include_timing) {
        out["elapsed_seconds"] = r.elapsed_seconds;
    }
    return out;
}

const json& require(const json& obj, const char* key) {
    if (!obj.is_object()) {
        throw WireError("expected a JSON object");
    }
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw WireError(std::string("missing field \"") + key + "\"");
    }
    return *it;
}

Complex decode_complex(const json& j) {
    require_array(j, 2, "complex number");
    if (!j[0].is_number() || !j[1].is_number()) {
        throw WireError("complex number: entries must be numbers");
    }
    const double re = j[0].get<double>();
    const double im = j[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw WireError("complex number: entries must be finite");
    }
    return {re, im};
}

TetraPoint decode_point(const json& j) {
    require_array(j, 3, "point");
    return {decode_complex(j[0]), decode_complex(j[1]), decode_complex(j[2])};
}

TangentTarget decode_target(const json& j) {
    require_array(j, 3, "target");
    return {decode_complex(j[0]), decode_complex(j[1]), decode_complex(j[2])};
}

Matrix2 decode_matrix(const json& j) {
    require_array(j, 4, "matrix");
    return {decode_complex(j[0]), decode_complex(j[1]), decode_complex(j[2]), decode_complex(j[3])};
}

DiscAutomorphism decode_disc(const json& j) {
    const DiscAutomorphism u{decode_complex(require(j, "omega")), decode_complex(require(j, "alpha"))};
    if (!u.is_valid(1e-9)) {
        throw WireError("disc automorphism: need |omega| = 1 and |alpha| < 1");
    }
    return u;
}

TetraAutomorphism decode_automorphism(const json& j) {
    const json& flip = require(j, "flip");
    if (!flip.is_boolean()) {
        throw WireError("automorphism: \"flip\" must be a boolean");
    }
    return {decode_disc(require(j, "upsilon")), decode_disc(require(j, "chi")), flip.get<bool>()};
}

namespace {

void write_number(std::string& out, double v) {
    if (!std::isfinite(v)) {
        out += "null";
        return;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

void write_value(std::string& out, const json& j, bool pretty, int depth) {
    const auto newline = [&](int d) {
        if (pretty) {
            out += '\n';
            out.append(static_cast<std::size_t>(2 * d), ' ');
        }
    };
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) {
                    out += ',';
                }
                first = false;
                newline(depth + 1);
                out += json(it.key()).dump();
                out += pretty ? ": " : ":";
                write_value(out, it.value(), pretty, depth + 1);
            }
            newline(depth);
            out += '}';
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // arrays of scalars stay on one line so complex numbers read as [re, im]
            const bool flat = std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); });
            out += '[';
            bool first = true;
            for (const json& e : j) {
                if (!first) {
                    out += (pretty && flat) ? ", " : ",";
                }
                first = false;
                if (!flat) {
                    newline(depth + 1);
                }
                write_value(out, e, pretty, depth + 1);
            }
            if (!flat) {
                newline(depth);
            }
            out += ']';
            return;
        }
        case json::value_t::number_float:
            write_number(out, j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string dump(const json& j, bool pretty) {
    std::string out;
    write_value(out, j, pretty, 0);
    return out;
}

}  // namespace tetra::wire
