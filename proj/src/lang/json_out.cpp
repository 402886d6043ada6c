#include "unitc/lang/json_out.hpp"

#include "json.hpp"

namespace unitc::lang {

namespace {

using nlohmann::json;

template <class... Ts>
struct Overload : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

json exponent_strings(const std::vector<Rational>& xs) {
    json arr = json::array();
    for (const Rational& x : xs) arr.push_back(x.str());
    return arr;
}

json payload_json(const Result& r) {
    return std::visit(
        Overload{
            [](const std::monostate&) -> json { return nullptr; },
            [](const DimPayload& p) -> json { return json{{"dims", p.dims.str()}}; },
            [](const CheckPayload& p) -> json {
                return json{{"lhs", p.lhs.str()}, {"rhs", p.rhs.str()}};
            },
            [](const ExpressPayload& p) -> json {
                return json{
                    {"basis", std::vector<std::string>(p.basis.begin(), p.basis.end())},
                    {"coefficient", p.coeff},
                    {"exponents",
                     exponent_strings({p.exponents.begin(), p.exponents.end()})},
                };
            },
            [](const PiGroupsPayload& p) -> json {
                json groups = json::array();
                for (const std::vector<Rational>& g : p.groups) {
                    groups.push_back(exponent_strings(g));
                }
                return json{{"groups", groups}, {"names", p.names}};
            },
            [](const RatioPayload& p) -> json { return json{{"value", p.value}}; },
        },
        r.payload);
}

}  // namespace

namespace {

const char* severity_name(Severity s) {
    switch (s) {
        case Severity::Error: return "error";
        case Severity::Failure: return "failure";
        case Severity::Info: return "info";
    }
    return "?";
}

}  // namespace

std::string to_json(const EvalOutput& output) {
    json diagnostics = json::array();
    for (const Diagnostic& d : output.diagnostics) {
        diagnostics.push_back(json{
            {"code", d.code},
            {"column", d.col},
            {"line", d.line},
            {"message", d.message},
            {"severity", severity_name(d.severity)},
        });
    }
    json results = json::array();
    for (const Result& r : output.results) {
        results.push_back(json{
            {"kind", r.kind},
            {"ok", r.ok},
            {"payload", payload_json(r)},
            {"stmt", r.stmt},
        });
    }
    json doc{
        {"diagnostics", diagnostics},
        {"results", results},
        {"version", "1"},
    };
    return doc.dump(2) + "\n";
}

}  // namespace unitc::lang
