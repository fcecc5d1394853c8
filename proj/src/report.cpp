#include "hopfcat/report.hpp"

#include <sstream>

namespace hopfcat {

Json verdict_json(const Verdict& v) {
    Json checks = Json::array();
    for (const auto& c : v.checks) {
        Json item;
        item["name"] = c.name;
        item["pass"] = c.pass;
        if (c.items > 0) item["items"] = c.items;
        if (!c.witness.empty()) item["witness"] = c.witness;
        if (!c.details.empty()) item["details"] = c.details;
        checks.push_back(std::move(item));
    }
    Json out;
    out["pass"] = v.pass;
    out["degree"] = v.degree;
    out["checks"] = std::move(checks);
    return out;
}

Json make_report(const std::string& command, const std::string& model_path,
                 const std::string& subject, int degree, const Verdict& verdict, Json data) {
    Json report;
    report["schema"] = "hopfcat-report/1";
    report["tool"] = "hopfcat";
    report["command"] = command;
    report["model"] = model_path;
    report["subject"] = subject;
    report["degree"] = degree;
    report["verdict"] = verdict_json(verdict);
    report["data"] = std::move(data);
    return report;
}

namespace {

void render_value(std::ostringstream& os, const Json& value, int indent);

void render_object(std::ostringstream& os, const Json& obj, int indent) {
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    for (const auto& [key, value] : obj.items()) {
        os << pad << key << ":";
        if (value.is_object() || value.is_array()) {
            os << "\n";
            render_value(os, value, indent + 1);
        } else {
            os << " ";
            render_value(os, value, indent);
            os << "\n";
        }
    }
}

void render_value(std::ostringstream& os, const Json& value, int indent) {
    if (value.is_object()) {
        render_object(os, value, indent);
    } else if (value.is_array()) {
        const std::string pad(static_cast<size_t>(indent) * 2, ' ');
        for (const auto& elem : value) {
            if (elem.is_object() || elem.is_array()) {
                os << pad << "-\n";
                render_value(os, elem, indent + 1);
            } else {
                os << pad << "- ";
                render_value(os, elem, indent);
                os << "\n";
            }
        }
    } else if (value.is_string()) {
        os << value.get<std::string>();
    } else if (value.is_boolean()) {
        os << (value.get<bool>() ? "yes" : "no");
    } else {
        os << value.dump();
    }
}

std::string render_text(const Json& report) {
    std::ostringstream os;
    os << report.value("command", "?") << " " << report.value("subject", "?")
       << "  (model " << report.value("model", "?")
       << ", degree " << report.value("degree", Json(0)).dump() << ")\n";
    const Json& verdict = report.at("verdict");
    os << "verdict: " << (verdict.at("pass").get<bool>() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : verdict.at("checks")) {
        os << "  [" << (c.at("pass").get<bool>() ? "ok" : "FAIL") << "] "
           << c.at("name").get<std::string>();
        if (c.contains("items")) os << " (" << c.at("items").dump() << " items)";
        os << "\n";
        if (c.contains("witness"))
            os << "        witness: " << c.at("witness").get<std::string>() << "\n";
        if (c.contains("details"))
            os << "        " << c.at("details").get<std::string>() << "\n";
    }
    if (report.contains("data") && !report.at("data").empty()) {
        os << "data:\n";
        render_value(os, report.at("data"), 1);
    }
    if (report.contains("timing_ms")) os << "timing_ms: " << report.at("timing_ms").dump() << "\n";
    return os.str();
}

}  // namespace

std::string render_report(const Json& report, const std::string& format) {
    if (format == "text") return render_text(report);
    return report.dump(2) + "\n";
}

}  // namespace hopfcat
