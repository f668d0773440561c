#include "abc/store.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include <json.hpp>

namespace abc::store {

namespace {

double round_sig(double v, int digits) {
    if (v == 0 || !std::isfinite(v)) return v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return std::strtod(buf, nullptr);
}

std::string now_iso8601() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

using Json = nlohmann::ordered_json;

void put_opt_str(Json& j, const char* key, const std::optional<std::string>& v) {
    if (v)
        j[key] = *v;
    else
        j[key] = nullptr;
}

void put_opt_num(Json& j, const char* key, const std::optional<double>& v) {
    if (v)
        j[key] = *v;
    else
        j[key] = nullptr;
}

std::optional<std::string> get_opt_str(const Json& j, const char* key) {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    return j[key].get<std::string>();
}

std::optional<double> get_opt_num(const Json& j, const char* key) {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    return j[key].get<double>();
}

}  // namespace

TripleRecord record_from_report(const TripleReport& rep) {
    TripleRecord r;
    r.a = to_string(rep.triple.a);
    r.b = to_string(rep.triple.b);
    r.c = to_string(rep.triple.c);
    if (rep.radical) r.radical = to_string(*rep.radical);
    if (rep.radical_bound) r.radical_bound = to_string(*rep.radical_bound);
    if (rep.quality) r.quality = round_sig(*rep.quality, 12);
    if (rep.quality_lower_bound) r.quality_lower_bound = round_sig(*rep.quality_lower_bound, 12);
    if (rep.merit) r.merit = round_sig(*rep.merit, 12);
    r.method = rep.method;
    r.timestamp = now_iso8601();
    return r;
}

std::string serialize(const TripleRecord& rec) {
    Json j;
    j["a"] = rec.a;
    j["b"] = rec.b;
    j["c"] = rec.c;
    put_opt_str(j, "radical", rec.radical);
    put_opt_str(j, "radical_bound", rec.radical_bound);
    put_opt_num(j, "quality", rec.quality);
    put_opt_num(j, "quality_lower_bound", rec.quality_lower_bound);
    put_opt_num(j, "merit", rec.merit);
    j["method"] = rec.method;
    j["timestamp"] = rec.timestamp;
    return j.dump();
}

TripleRecord parse_record(const std::string& line) {
    Json j;
    try {
        j = Json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw StoreCorrupt(0, std::string("unparseable record: ") + e.what());
    }
    try {
        TripleRecord r;
        r.a = j.at("a").get<std::string>();
        r.b = j.at("b").get<std::string>();
        r.c = j.at("c").get<std::string>();
        r.radical = get_opt_str(j, "radical");
        r.radical_bound = get_opt_str(j, "radical_bound");
        r.quality = get_opt_num(j, "quality");
        r.quality_lower_bound = get_opt_num(j, "quality_lower_bound");
        r.merit = get_opt_num(j, "merit");
        r.method = j.value("method", "");
        r.timestamp = j.value("timestamp", "");
        if (r.radical.has_value() == r.radical_bound.has_value())
            throw StoreCorrupt(0, "record needs exactly one of radical/radical_bound");
        triple_of(r);  // validates the triple itself
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw StoreCorrupt(0, std::string("malformed record: ") + e.what());
    }
}

AbcTriple triple_of(const TripleRecord& rec) {
    return triple_from_parts(int_from(rec.a), int_from(rec.b), int_from(rec.c));
}

Store::Store(std::filesystem::path path) : path_(std::move(path)) { load(); }

void Store::load() {
    records_.clear();
    std::ifstream in(path_);
    if (!in.is_open()) return;  // fresh store
    std::string line;
    size_t lineno = 0;
    std::map<std::string, size_t> index;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    const bool ended_with_newline = [&] {
        std::ifstream raw(path_, std::ios::binary | std::ios::ate);
        if (raw.tellg() == std::streampos(0)) return true;
        raw.seekg(-1, std::ios::end);
        char last;
        raw.get(last);
        return last == '\n';
    }();
    for (size_t i = 0; i < lines.size(); ++i) {
        lineno = i + 1;
        if (lines[i].empty()) continue;
        const bool is_last = (i + 1 == lines.size());
        try {
            TripleRecord rec = parse_record(lines[i]);
            auto it = index.find(rec.key());
            if (it == index.end()) {
                index[rec.key()] = records_.size();
                records_.push_back(std::move(rec));
            } else if (rec.radical && !records_[it->second].radical) {
                records_[it->second] = std::move(rec);  // exact beats bound-verified
            }
        } catch (const StoreCorrupt& e) {
            if (is_last && !ended_with_newline) break;  // torn final append
            throw StoreCorrupt(lineno, "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
}

AppendResult Store::append(const TripleRecord& rec) {
    const std::string key = rec.key();
    for (auto& existing : records_) {
        if (existing.key() != key) continue;
        if (rec.radical && !existing.radical) {
            existing = rec;
            std::ofstream out(path_, std::ios::app);
            out << serialize(rec) << '\n';
            return AppendResult::upgraded;
        }
        return AppendResult::duplicate;
    }
    records_.push_back(rec);
    std::ofstream out(path_, std::ios::app);
    if (!out.is_open()) throw Error("store: cannot open " + path_.string() + " for append");
    out << serialize(rec) << '\n';
    return AppendResult::inserted;
}

std::vector<TripleRecord> Store::rank(const std::string& key, size_t top) const {
    if (key != "quality" && key != "merit") throw DomainError("rank: key must be quality or merit");
    std::vector<TripleRecord> out = records_;
    auto value_of = [&](const TripleRecord& r) -> std::optional<double> {
        return key == "merit" ? r.merit : r.quality;
    };
    std::stable_sort(out.begin(), out.end(), [&](const TripleRecord& x, const TripleRecord& y) {
        const auto vx = value_of(x), vy = value_of(y);
        if (vx.has_value() != vy.has_value()) return vx.has_value();
        if (vx && vy && *vx != *vy) return *vx > *vy;
        const Int cx = int_from(x.c), cy = int_from(y.c);
        if (cx != cy) return cx < cy;
        const Int ax = int_from(x.a), ay = int_from(y.a);
        if (ax != ay) return ax < ay;
        return int_from(x.b) < int_from(y.b);
    });
    if (out.size() > top) out.resize(top);
    return out;
}

}  // namespace abc::store
