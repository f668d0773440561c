#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "abc/triple.hpp"

namespace abc::store {

// One JSONL line. Big integers ride as decimal strings; exactly one of
// radical / radical_bound is set, and the quality fields follow suit.
struct TripleRecord {
    std::string a, b, c;
    std::optional<std::string> radical;
    std::optional<std::string> radical_bound;
    std::optional<double> quality;
    std::optional<double> quality_lower_bound;
    std::optional<double> merit;
    std::string method;
    std::string timestamp;  // ISO-8601 UTC

    std::string key() const { return a + ":" + b + ":" + c; }
};

// Floats are rounded to 12 significant digits on the way in.
TripleRecord record_from_report(const TripleReport& rep);

std::string serialize(const TripleRecord& rec);            // fixed key order, no newline
TripleRecord parse_record(const std::string& line);        // throws StoreCorrupt(0, ...)
AbcTriple triple_of(const TripleRecord& rec);

enum class AppendResult { inserted, duplicate, upgraded };

// Append-only JSONL store with dedup on the a:b:c key. A bound-verified
// record upgrades to exact when a later record brings the exact radical;
// replay resolves duplicate keys by preferring the exact record. A trailing
// partial line (crash during append) is dropped; corruption anywhere else
// reports the line number.
class Store {
  public:
    explicit Store(std::filesystem::path path);

    AppendResult append(const TripleRecord& rec);
    const std::vector<TripleRecord>& records() const { return records_; }

    // Descending by quality or merit; records without the key sort last.
    // Ties break toward smaller c, then lexicographic (a, b).
    std::vector<TripleRecord> rank(const std::string& key, size_t top) const;

  private:
    std::filesystem::path path_;
    std::vector<TripleRecord> records_;
    void load();
};

}  // namespace abc::store
