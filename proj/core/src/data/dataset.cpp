#include "tap/data/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "tap/parallel.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace tap::data {

const DailySeries& Dataset::at(const SeriesKey& key) const {
    const auto it = series.find(key);
    if (it == series.end()) {
        throw std::out_of_range("series not in dataset: (" + key.source + ", " + key.feature +
                                ", " + key.topic + ")");
    }
    return it->second;
}

double Dataset::value(const SeriesKey& key, DayIndex day) const { return at(key).at(day); }

bool Dataset::has(const SeriesKey& key) const { return series.count(key) != 0; }

bool Dataset::group_enabled(SourceGroup g) const {
    return std::find(enabled_groups.begin(), enabled_groups.end(), g) != enabled_groups.end();
}

SeriesKey Dataset::target_key(const std::string& topic) const {
    return {kPlatformSource, target_feature, topic};
}

std::vector<SeriesKey> Dataset::logical_series(const std::string& topic) const {
    std::vector<SeriesKey> keys;
    keys.push_back(target_key(topic));
    for (const CatalogEntry& e : feature_catalog()) {
        if (!group_enabled(e.group)) continue;
        keys.push_back({e.source, e.feature, e.per_topic ? topic : std::string()});
    }
    return keys;
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_count(const std::string& text, const std::string& where) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw std::invalid_argument(where + ": unparseable value '" + text + "'");
    }
    if (v < 0.0) throw std::invalid_argument(where + ": negative count " + text);
    if (v != std::floor(v)) {
        throw std::invalid_argument(where + ": non-integer count '" + text + "'");
    }
    return v;
}

using RecordMap = std::map<SeriesKey, std::vector<RawRecord>>;

RecordMap parse_csv_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument(path.string() + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "date,source,feature,topic,value") {
        throw std::invalid_argument(path.string() + ": bad header '" + line + "'");
    }

    RecordMap records;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> cells = split_csv_row(line);
        const std::string where = path.string() + ":" + std::to_string(lineno);
        if (cells.size() != 5) {
            throw std::invalid_argument(where + ": expected 5 columns, got " +
                                        std::to_string(cells.size()));
        }
        SeriesKey key{cells[1], cells[2], cells[3]};
        records[key].push_back({cells[0], parse_count(cells[4], where)});
    }
    return records;
}

std::string require_string(const json& j, const char* field, const std::string& where) {
    if (!j.contains(field) || !j.at(field).is_string()) {
        throw std::invalid_argument(where + ": missing string field '" + field + "'");
    }
    return j.at(field).get<std::string>();
}

}  // namespace

Dataset load_dataset(const std::string& directory, int jobs) {
    const fs::path dir(directory);
    if (!fs::is_directory(dir)) throw std::invalid_argument("not a directory: " + directory);

    const fs::path manifest_path = dir / "manifest.json";
    if (!fs::exists(manifest_path)) {
        throw std::invalid_argument(directory + ": missing manifest.json");
    }
    json manifest;
    {
        std::ifstream in(manifest_path);
        try {
            in >> manifest;
        } catch (const json::exception& e) {
            throw std::invalid_argument(manifest_path.string() + ": " + e.what());
        }
    }

    const std::string where = manifest_path.string();
    Dataset ds{Calendar(require_string(manifest, "epoch", where))};
    ds.platform = require_string(manifest, "platform", where);
    ds.range = {ds.cal.day(require_string(manifest, "start", where)),
                ds.cal.day(require_string(manifest, "end", where))};
    if (ds.range.last < ds.range.first) {
        throw std::invalid_argument(where + ": end date precedes start date");
    }
    if (!manifest.contains("topics") || !manifest.at("topics").is_array() ||
        manifest.at("topics").empty()) {
        throw std::invalid_argument(where + ": missing non-empty 'topics' array");
    }
    for (const json& t : manifest.at("topics")) ds.topics.push_back(t.get<std::string>());
    if (manifest.contains("target_feature")) {
        ds.target_feature = require_string(manifest, "target_feature", where);
    }

    std::vector<fs::path> csv_files;
    for (const fs::directory_entry& e : fs::directory_iterator(dir)) {
        if (e.is_regular_file() && e.path().extension() == ".csv") csv_files.push_back(e.path());
    }
    std::sort(csv_files.begin(), csv_files.end());
    if (csv_files.empty()) throw std::invalid_argument(directory + ": no CSV files");

    std::vector<RecordMap> per_file(csv_files.size());
    parallel_for(csv_files.size(), static_cast<unsigned>(std::max(1, jobs)),
                 [&](std::size_t i) { per_file[i] = parse_csv_file(csv_files[i]); });

    RecordMap merged;
    for (RecordMap& one : per_file) {
        for (auto& [key, recs] : one) {
            auto& slot = merged[key];
            slot.insert(slot.end(), recs.begin(), recs.end());
        }
    }
    for (const auto& [key, recs] : merged) {
        ds.series.emplace(key, align(key, recs, ds.cal, ds.range));
    }

    // Catalog completeness: a fully absent exogenous group degrades with a
    // warning; anything else missing is fatal.
    for (SourceGroup g : kAllGroups) {
        std::vector<std::string> missing;
        std::size_t expected = 0;
        for (const CatalogEntry& e : group_entries(g)) {
            if (e.per_topic) {
                for (const std::string& topic : ds.topics) {
                    ++expected;
                    const SeriesKey key{e.source, e.feature, topic};
                    if (!ds.has(key)) missing.push_back(key.str());
                }
            } else {
                ++expected;
                const SeriesKey key{e.source, e.feature, ""};
                if (!ds.has(key)) missing.push_back(key.str());
            }
        }
        if (missing.empty()) {
            ds.enabled_groups.push_back(g);
        } else if (missing.size() == expected && g != SourceGroup::EndogenousOnly) {
            ds.warnings.push_back("source group '" + to_string(g) +
                                  "' absent; disabling its models");
        } else {
            std::string list;
            for (const std::string& m : missing) list += (list.empty() ? "" : ", ") + m;
            throw std::invalid_argument("dataset incomplete, missing: " + list);
        }
    }

    if (ds.target_feature != kDefaultTargetFeature) {
        for (const std::string& topic : ds.topics) {
            if (!ds.has(ds.target_key(topic))) {
                throw std::invalid_argument("dataset incomplete, missing target series: " +
                                            ds.target_key(topic).str());
            }
        }
    }
    return ds;
}

void save_dataset(const Dataset& ds, const std::string& directory) {
    const fs::path dir(directory);
    fs::create_directories(dir);

    json manifest;
    manifest["epoch"] = ds.cal.iso({0});
    manifest["platform"] = ds.platform;
    manifest["start"] = ds.cal.iso(ds.range.first);
    manifest["end"] = ds.cal.iso(ds.range.last);
    manifest["topics"] = ds.topics;
    manifest["target_feature"] = ds.target_feature;
    {
        std::ofstream out(dir / "manifest.json");
        out << manifest.dump(2) << "\n";
        if (!out) throw std::runtime_error("write failed: " + (dir / "manifest.json").string());
    }

    std::ofstream out(dir / "data.csv");
    out << "date,source,feature,topic,value\n";
    for (const auto& [key, s] : ds.series) {
        for (DayIndex d = s.start; d <= s.end(); d = d + 1) {
            out << ds.cal.iso(d) << ',' << key.source << ',' << key.feature << ',' << key.topic
                << ',' << static_cast<std::int64_t>(s.at(d)) << '\n';
        }
    }
    if (!out) throw std::runtime_error("write failed: " + (dir / "data.csv").string());
}

}  // namespace tap::data
