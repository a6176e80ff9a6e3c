#include "qhorn/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace qhorn {

using nlohmann::json;  // std::map-backed: keys serialize sorted

namespace {

json complex_json(Complex z) { return json{{"im", z.imag()}, {"re", z.real()}}; }

json point_json(const SamplePoint& p) {
    return json{{"alpha", complex_json(p.alpha)},
                {"beta", complex_json(p.beta)},
                {"gamma", complex_json(p.gamma)},
                {"x", complex_json(p.x)},
                {"y", complex_json(p.y)}};
}

json verdict_json(const Verdict& v) {
    json j{{"abs_residual", v.abs_residual},
           {"classification", classification_name(v.classification)},
           {"clean", v.clean},
           {"cond", v.cond},
           {"lhs", complex_json(v.lhs_value)},
           {"point", point_json(v.point)},
           {"q", complex_json(v.q)},
           {"rel_residual", v.rel_residual},
           {"rhs", complex_json(v.rhs_value)},
           {"variant", v.variant}};
    if (!v.reason.empty()) j["reason"] = v.reason;
    return j;
}

json report_json(const AuditReport& r) {
    json ids = json::array();
    for (const auto& o : r.identities) {
        json readings = json::array();
        for (const auto& ro : o.readings)
            readings.push_back(json{{"classification", classification_name(ro.classification)},
                                    {"label", ro.label},
                                    {"max_rel_residual", ro.max_rel_residual},
                                    {"n_inconclusive", ro.n_inconclusive},
                                    {"witness", verdict_json(ro.worst)}});
        ids.push_back(json{{"classification", record_class_name(o.record_class)},
                           {"eq", o.eq},
                           {"family", family_name(o.family)},
                           {"id", o.id},
                           {"max_rel_residual", o.max_rel_residual},
                           {"n_points", o.n_points},
                           {"readings", readings},
                           {"sampler_rejected", o.sampler_rejected},
                           {"variant", o.headline_variant},
                           {"witness", verdict_json(o.witness)}});
    }
    return json{{"identities", ids},
                {"policy", json{{"max_r", r.policy.max_r},
                                {"max_s", r.policy.max_s},
                                {"rel_tol", r.policy.rel_tol},
                                {"tail_block", r.policy.tail_block}}},
                {"q", complex_json(r.q)},
                {"sampler", json{{"n_points", r.sampler.n_points},
                                 {"param_mod_max", r.sampler.param_mod_max},
                                 {"param_mod_min", r.sampler.param_mod_min},
                                 {"q_mod_max", r.sampler.q_mod_max},
                                 {"q_mod_min", r.sampler.q_mod_min},
                                 {"x_y_radius", r.sampler.x_y_radius}}},
                {"seed", r.seed}};
}

std::string dtos(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "text") return Format::Text;
    throw ConfigError("unknown format: " + name + " (expected json, csv or text)");
}

std::string format_name(Format f) {
    switch (f) {
        case Format::Json: return "json";
        case Format::Csv: return "csv";
        case Format::Text: return "text";
    }
    return "?";
}

std::string render_report(const AuditReport& report, Format format) {
    if (format == Format::Json) return report_json(report).dump(2) + "\n";
    if (format == Format::Csv) {
        std::string out = "id,eq,family,variant,n_points,max_rel_residual,classification\n";
        for (const auto& o : report.identities) {
            out += o.id + "," + o.eq + "," + family_name(o.family) + "," + o.headline_variant +
                   "," + std::to_string(o.n_points) + "," + dtos(o.max_rel_residual) + "," +
                   record_class_name(o.record_class) + "\n";
        }
        return out;
    }
    std::ostringstream os;
    os << std::left << std::setw(8) << "id" << std::setw(7) << "eq" << std::setw(7) << "family"
       << std::setw(28) << "variant" << std::setw(20) << "classification"
       << "max_rel_residual\n";
    for (const auto& o : report.identities) {
        os << std::left << std::setw(8) << o.id << std::setw(7) << o.eq << std::setw(7)
           << family_name(o.family) << std::setw(28) << o.headline_variant << std::setw(20)
           << record_class_name(o.record_class) << std::scientific << std::setprecision(3)
           << o.max_rel_residual << "\n"
           << std::defaultfloat;
        if (o.readings.size() > 1) {
            for (const auto& ro : o.readings)
                os << "    reading " << std::left << std::setw(32) << ro.label << std::setw(16)
                   << classification_name(ro.classification) << std::scientific
                   << std::setprecision(3) << ro.max_rel_residual << "\n"
                   << std::defaultfloat;
        }
    }
    return os.str();
}

std::string verdict_to_string(const Verdict& v, Format format) {
    if (format == Format::Json) return verdict_json(v).dump(2) + "\n";
    if (format == Format::Csv) {
        return "id,variant,classification,rel_residual,abs_residual\n" + v.id + "," + v.variant +
               "," + classification_name(v.classification) + "," + dtos(v.rel_residual) + "," +
               dtos(v.abs_residual) + "\n";
    }
    std::ostringstream os;
    os << v.id << " [" << v.variant << "] " << classification_name(v.classification)
       << "  rel_residual=" << std::scientific << std::setprecision(3) << v.rel_residual
       << " abs_residual=" << v.abs_residual << "\n"
       << "  lhs=" << std::setprecision(16) << v.lhs_value.real() << "+" << v.lhs_value.imag()
       << "i rhs=" << v.rhs_value.real() << "+" << v.rhs_value.imag() << "i\n";
    if (!v.reason.empty()) os << "  reason: " << v.reason << "\n";
    return os.str();
}

std::string eval_to_string(const EvalResult& r, Format format) {
    if (format == Format::Json) {
        json j{{"tail_estimate", r.tail_estimate},
               {"terms_used", r.terms_used},
               {"truncated_cleanly", r.truncated_cleanly},
               {"value", complex_json(r.value)}};
        return j.dump(2) + "\n";
    }
    if (format == Format::Csv) {
        return "value_re,value_im,terms_used,tail_estimate,truncated_cleanly\n" +
               dtos(r.value.real()) + "," + dtos(r.value.imag()) + "," +
               std::to_string(r.terms_used) + "," + dtos(r.tail_estimate) + "," +
               (r.truncated_cleanly ? "true" : "false") + "\n";
    }
    std::ostringstream os;
    os << "value = " << std::setprecision(16) << r.value.real();
    if (r.value.imag() != 0.0) os << (r.value.imag() < 0 ? " - " : " + ")
                                  << std::abs(r.value.imag()) << "i";
    os << "\nterms_used = " << r.terms_used << "\ntail_estimate = " << std::scientific
       << std::setprecision(3) << r.tail_estimate
       << "\ntruncated_cleanly = " << (r.truncated_cleanly ? "true" : "false") << "\n";
    return os.str();
}

bool has_unresolved_failure(const AuditReport& report) {
    for (const auto& o : report.identities) {
        if (o.readings.empty()) continue;
        if (o.readings.front().classification != Classification::Failed) continue;
        bool variant_passed = false;
        for (size_t k = 1; k < o.readings.size(); ++k)
            if (o.readings[k].classification == Classification::Verified) variant_passed = true;
        if (!variant_passed) return true;
    }
    return false;
}

void write_file_atomic(const std::string& path, const std::string& bytes) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("cannot open " + tmp.string() + " for writing");
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) throw ConfigError("short write to " + tmp.string());
    }
    fs::rename(tmp, target);
}

}  // namespace qhorn
