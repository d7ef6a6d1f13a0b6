#include "vsc/emit.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace vsc {

namespace {

int kind_rank(const std::string& kind) {
    if (kind == "gw") return 0;
    if (kind == "vsc") return 1;
    if (kind == "n") return 2;
    if (kind == "m") return 3;
    return 4;
}

nlohmann::json insertions_to_json(const Insertions& ins) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, n] : ins)
        if (n != 0) j[std::to_string(k)] = n;
    return j;
}

Insertions insertions_from_json(const nlohmann::json& j) {
    Insertions ins;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int n = it.value().get<int>();
        if (n != 0) ins[std::stoi(it.key())] = n;
    }
    return ins;
}

nlohmann::json genus_to_json(const std::string& genus) {
    if (genus == "counts") return genus;
    return std::stoi(genus);
}

}  // namespace

void sort_rows(std::vector<ResultRow>& rows) {
    std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
        if (a.d != b.d) return a.d < b.d;
        int ra = kind_rank(a.kind), rb = kind_rank(b.kind);
        if (ra != rb) return ra < rb;
        return a.ins < b.ins;
    });
}

std::string to_json(const Report& report) {
    nlohmann::json j;
    j["space"] = report.space;
    j["genus"] = genus_to_json(report.genus);
    j["results"] = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json r;
        r["d"] = row.d;
        r["insertions"] = insertions_to_json(row.ins);
        r["kind"] = row.kind;
        r["value"] = row.value.str();
        j["results"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

std::string to_csv(const Report& report) {
    std::ostringstream os;
    os << "space,genus,d,insertions,kind,value\n";
    for (const auto& row : report.rows) {
        os << report.space << "," << report.genus << "," << row.d << ","
           << "\"" << insertions_str(row.ins) << "\"," << row.kind << "," << row.value.str()
           << "\n";
    }
    return os.str();
}

std::string to_markdown(const Report& report) {
    std::ostringstream os;
    os << "| d | insertions | kind | value |\n|---|---|---|---|\n";
    for (const auto& row : report.rows) {
        std::string ins = insertions_str(row.ins);
        os << "| " << row.d << " | " << (ins.empty() ? "-" : ins) << " | " << row.kind << " | "
           << row.value.str() << " |\n";
    }
    return os.str();
}

Fixture fixture_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Fixture f;
    f.source = j.at("source").get<std::string>();
    f.space = j.at("space").get<std::string>();
    if (j.at("genus").is_string()) f.genus = j.at("genus").get<std::string>();
    else f.genus = std::to_string(j.at("genus").get<int>());
    for (const auto& r : j.at("results")) {
        ResultRow row;
        row.d = r.at("d").get<int>();
        row.ins = insertions_from_json(r.at("insertions"));
        row.kind = r.at("kind").get<std::string>();
        row.value = Rational::parse(r.at("value").get<std::string>());
        f.rows.push_back(std::move(row));
    }
    return f;
}

Fixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return fixture_from_json(ss.str());
}

}  // namespace vsc
