#include "render.hpp"

#include <cmath>
#include <ostream>

namespace graphcvx::cli {

namespace {

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return format_value(v.get<double>());
    return v.dump();
}

std::string inline_object(const Json& object) {
    std::string out;
    for (const auto& [key, value] : object.items()) {
        if (!out.empty()) out += ' ';
        out += key + '=' + (value.is_object() ? '{' + inline_object(value) + '}' : scalar_text(value));
    }
    return out;
}

}  // namespace

Json value_json(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    return value;
}

Json claim_json(const ClaimReport& report) {
    Json out;
    out["claim"] = report.claim;
    out["instance"] = report.instance;
    out["checked"] = report.checked;
    out["hypothesis_fired"] = report.fired;
    out["verdict"] = std::string(to_string(report.verdict()));
    if (report.witness) {
        Json witness = Json::object();
        for (const auto& [key, value] : *report.witness) {
            if (const auto* s = std::get_if<std::string>(&value)) {
                witness[key] = *s;
            } else {
                witness[key] = value_json(std::get<double>(value));
            }
        }
        out["witness"] = witness;
    }
    return out;
}

void print(std::ostream& out, const Json& report, Format format) {
    if (format == Format::json) {
        out << report.dump(2) << '\n';
        return;
    }
    for (const auto& [key, value] : report.items()) {
        if (value.is_object()) {
            out << key << ": " << inline_object(value) << '\n';
        } else if (value.is_array()) {
            out << key << ":";
            if (!value.empty() && value.front().is_object()) {
                out << '\n';
                for (const auto& item : value) out << "  " << inline_object(item) << '\n';
            } else {
                for (const auto& item : value) out << ' ' << scalar_text(item);
                out << '\n';
            }
        } else {
            out << key << ": " << scalar_text(value) << '\n';
        }
    }
}

}  // namespace graphcvx::cli
