#include "fmr/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fmr {

using nlohmann::json;

static BaseRing ring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("ring descriptor must have a kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "integers") return BaseRing::integers();
    if (kind == "modular") {
        if (!j.contains("m")) throw ParseError("modular ring needs a modulus m");
        return BaseRing::modular(j.at("m").get<Int>());
    }
    throw ParseError("unknown ring kind: " + kind);
}

static json ring_to_json(const BaseRing& R) {
    if (R.is_modular()) return {{"kind", "modular"}, {"m", R.modulus()}};
    return {{"kind", "integers"}};
}

std::variant<SystemFile, Violation> parse_system_checked(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        BaseRing R = ring_from_json(j.at("ring"));
        int n = j.at("n").get<int>();
        if (n < 2) throw ParseError("n must be >= 2");
        const json& f = j.at("factors");
        std::string type = f.at("type").get<std::string>();

        if (type == "explicit") {
            const json& tbl = f.at("table");
            if (int(tbl.size()) != n) throw ParseError("table must have n layers");
            std::vector<Int> table(std::size_t(n) * n * n);
            for (int i = 1; i <= n; ++i) {
                const json& layer = tbl.at(std::size_t(i) - 1);
                if (int(layer.size()) != n) throw ParseError("table layer has wrong size");
                for (int jj = 1; jj <= n; ++jj) {
                    const json& row = layer.at(std::size_t(jj) - 1);
                    if (int(row.size()) != n) throw ParseError("table row has wrong size");
                    for (int k = 1; k <= n; ++k)
                        table[table_index(n, i, jj, k)] = row.at(std::size_t(k) - 1).get<Int>();
                }
            }
            auto out = validate(n, R, table);
            if (std::holds_alternative<Violation>(out)) return std::get<Violation>(std::move(out));
            std::optional<Int> s;
            if (f.contains("s")) s = R.norm(f.at("s").get<Int>());
            return SystemFile{std::get<FactorSystem>(std::move(out)), s};
        }
        if (type == "binary") {
            Int s = f.at("s").get<Int>();
            std::vector<int> classes = f.at("classes").get<std::vector<int>>();
            if (int(classes.size()) != n) throw ParseError("classes must list n labels");
            return SystemFile{binary_system(R, classes, s), R.norm(s)};
        }
        if (type == "coboundary") {
            Int s = f.at("s").get<Int>();
            const json& gj = f.at("g");
            if (int(gj.size()) != n) throw ParseError("g must be n x n");
            ExponentMatrix g(n);
            for (int i = 1; i <= n; ++i) {
                const json& row = gj.at(std::size_t(i) - 1);
                if (int(row.size()) != n) throw ParseError("g row has wrong size");
                for (int jj = 1; jj <= n; ++jj)
                    g.at(i, jj) = row.at(std::size_t(jj) - 1).get<Int>();
            }
            return SystemFile{coboundary_system(R, g, s), R.norm(s)};
        }
        throw ParseError("unknown factors type: " + type);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed system file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("rejected system file: ") + e.what());
    }
}

SystemFile parse_system(const std::string& text) {
    auto out = parse_system_checked(text);
    if (std::holds_alternative<Violation>(out))
        throw ParseError("factor table rejected: " + std::get<Violation>(out).message());
    return std::get<SystemFile>(std::move(out));
}

static std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SystemFile load_system(const std::string& path) { return parse_system(slurp(path)); }

std::variant<SystemFile, Violation> load_system_checked(const std::string& path) {
    return parse_system_checked(slurp(path));
}

std::string system_to_json(const FactorSystem& sys, std::optional<Int> s) {
    const int n = sys.order();
    json tbl = json::array();
    for (int i = 1; i <= n; ++i) {
        json layer = json::array();
        for (int j = 1; j <= n; ++j) {
            json row = json::array();
            for (int k = 1; k <= n; ++k) row.push_back(sys.at(i, j, k));
            layer.push_back(std::move(row));
        }
        tbl.push_back(std::move(layer));
    }
    json factors = {{"type", "explicit"}, {"table", std::move(tbl)}};
    if (s) factors["s"] = *s;
    json j = {{"ring", ring_to_json(sys.ring())}, {"n", n}, {"factors", std::move(factors)}};
    return j.dump(2);
}

void save_system(const std::string& path, const FactorSystem& sys, std::optional<Int> s) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << system_to_json(sys, s) << "\n";
}

BaseRing parse_ring_descriptor(const std::string& text) {
    if (text == "int" || text == "Z" || text == "integers") return BaseRing::integers();
    if (text.rfind("mod:", 0) == 0) {
        try {
            return BaseRing::modular(std::stoll(text.substr(4)));
        } catch (const std::exception&) {
            throw ParseError("bad modulus in ring descriptor: " + text);
        }
    }
    throw ParseError("unknown ring descriptor (expected mod:M or int): " + text);
}

}  // namespace fmr
