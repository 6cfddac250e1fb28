#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace sqcli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double safe_ratio(double num, double den) {
    if (den == 0.0 || !std::isfinite(num) || !std::isfinite(den)) return kNaN;
    return num / den;
}

std::string num(double v) {
    if (!std::isfinite(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

Row upper(std::string lemma, std::string instance, double exact, double bound, double rel, double abs) {
    Row r{std::move(lemma), std::move(instance), exact, bound, safe_ratio(exact, bound), true, true};
    r.pass = exact <= bound + rel * std::fabs(bound) + abs;
    return r;
}

Row lower(std::string lemma, std::string instance, double exact, double bound, double rel) {
    Row r{std::move(lemma), std::move(instance), exact, bound, safe_ratio(bound, exact), true, true};
    r.pass = exact >= bound - rel * std::fabs(bound);
    return r;
}

Row equal(std::string lemma, std::string instance, double exact, double expected, double tol) {
    Row r{std::move(lemma), std::move(instance), exact, expected, safe_ratio(exact, expected), true, true};
    r.pass = std::fabs(exact - expected) <= tol;
    return r;
}

bool Report::ok() const {
    for (const auto& r : rows)
        if (r.contract && !r.pass) return false;
    return true;
}

ordered_json Report::to_json() const {
    ordered_json j;
    j["schema"] = "report-v1";
    j["command"] = command;
    j["config"] = config;
    ordered_json rs = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json o;
        o["lemma"] = r.lemma;
        o["instance"] = r.instance;
        o["exact"] = r.exact;
        o["bound"] = r.bound;
        // dump() would print NaN as null anyway; be explicit
        if (std::isfinite(r.ratio)) o["ratio"] = r.ratio;
        else o["ratio"] = nullptr;
        o["pass"] = r.pass;
        o["contract"] = r.contract;
        rs.push_back(std::move(o));
    }
    j["rows"] = std::move(rs);
    j["data"] = data;
    j["ok"] = ok();
    return j;
}

void write_json(std::ostream& out, const Report& r) { out << r.to_json().dump(2) << '\n'; }

void write_csv(std::ostream& out, const Report& r) {
    out << "lemma,instance,exact,bound,ratio,pass\n";
    for (const auto& row : r.rows)
        out << csv_field(row.lemma) << ',' << csv_field(row.instance) << ',' << num(row.exact) << ','
            << num(row.bound) << ',' << num(row.ratio) << ',' << (row.pass ? "true" : "false") << '\n';
}

double Draw::uniform(double lo, double hi) {
    const double u = static_cast<double>(g_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

std::int64_t Draw::integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(g_() % span);  // modulo bias is irrelevant here
}

std::string kv(const char* key, std::int64_t v) { return std::string(key) + "=" + std::to_string(v); }

std::string kv(const char* key, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s=%.10g", key, v);
    return buf;
}

}  // namespace sqcli
