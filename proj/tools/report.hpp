// Report rows and their JSON / CSV serialization (schema report-v1).
#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

namespace sqcli {

using nlohmann::ordered_json;

struct Row {
    std::string lemma;
    std::string instance;
    double exact = 0.0;
    double bound = 0.0;
    double ratio = 0.0;  // NaN when undefined; pass always means "ratio <= 1" when defined
    bool pass = true;
    bool contract = true;  // a failing contract row makes the run exit 1
};

// exact <= bound, up to a relative slack and an absolute floor.
Row upper(std::string lemma, std::string instance, double exact, double bound, double rel = 1e-9,
          double abs = 1e-12);
// exact >= bound.
Row lower(std::string lemma, std::string instance, double exact, double bound, double rel = 1e-9);
// |exact - expected| <= tol.
Row equal(std::string lemma, std::string instance, double exact, double expected, double tol);

struct Report {
    std::string command;
    ordered_json config = ordered_json::object();
    std::vector<Row> rows;
    ordered_json data = ordered_json::object();

    bool ok() const;
    ordered_json to_json() const;
};

void write_json(std::ostream& out, const Report& r);
void write_csv(std::ostream& out, const Report& r);

// Seeded draws. The engine output is fixed by the standard; the mapping to
// ranges is done here because the library distributions are not.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : g_(seed) {}
    double uniform(double lo, double hi);
    std::int64_t integer(std::int64_t lo, std::int64_t hi);  // inclusive

private:
    std::mt19937_64 g_;
};

std::string kv(const char* key, std::int64_t v);
std::string kv(const char* key, double v);

}  // namespace sqcli
