#include "assoc/format.hpp"

#include <charconv>
#include <vector>

#include <json.hpp>

#include "assoc/error.hpp"

namespace assoc {

namespace {

int parse_int(std::string_view s, std::string_view what) {
    int v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc{} || ptr != end) {
        throw InvalidInput("malformed " + std::string(what) + ": '" + std::string(s) + "'");
    }
    return v;
}

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

}  // namespace

std::string to_text(const Triangulation& t) {
    std::string out = "n=" + std::to_string(t.size()) + ";interior=";
    bool first = true;
    for (const Edge& e : t.interior()) {
        if (!first) out += ',';
        first = false;
        out += to_string(e);
    }
    return out;
}

Triangulation parse_text(std::string_view s) {
    s = trim(s);
    const auto semi = s.find(';');
    if (s.substr(0, 2) != "n=" || semi == std::string_view::npos) {
        throw InvalidInput("expected 'n=<int>;interior=...'");
    }
    const int n = parse_int(s.substr(2, semi - 2), "polygon size");
    std::string_view rest = s.substr(semi + 1);
    if (rest.substr(0, 9) != "interior=") throw InvalidInput("expected 'interior=' after ';'");
    rest.remove_prefix(9);

    std::vector<Edge> edges;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        const auto dash = item.find('-');
        if (dash == std::string_view::npos) {
            throw InvalidInput("malformed edge '" + std::string(item) + "'");
        }
        const int a = parse_int(item.substr(0, dash), "edge endpoint");
        const int b = parse_int(item.substr(dash + 1), "edge endpoint");
        if (a >= b) throw InvalidInput("edge '" + std::string(item) + "' is not written as a<b");
        edges.emplace_back(a, b);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
        if (rest.empty()) throw InvalidInput("trailing ',' in edge list");
    }
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (!(edges[i - 1] < edges[i])) throw InvalidInput("edges are not sorted lexicographically");
    }
    return Triangulation::from_interior(n, edges);
}

std::string to_json(const Triangulation& t) {
    nlohmann::ordered_json j;
    j["n"] = t.size();
    j["interior"] = nlohmann::json::array();
    for (const Edge& e : t.interior()) j["interior"].push_back({e.a, e.b});
    return j.dump();
}

Triangulation parse_json(std::string_view s) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("interior") ||
        !j["n"].is_number_integer() || !j["interior"].is_array()) {
        throw InvalidInput("expected {\"n\":N,\"interior\":[[a,b],...]}");
    }
    std::vector<Edge> edges;
    for (const auto& item : j["interior"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer()) {
            throw InvalidInput("interior edges must be [a,b] integer pairs");
        }
        const int a = item[0].get<int>();
        const int b = item[1].get<int>();
        if (a >= b) throw InvalidInput("edge " + item.dump() + " is not written as a<b");
        edges.emplace_back(a, b);
    }
    return Triangulation::from_interior(j["n"].get<int>(), edges);
}

Triangulation parse_triangulation(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '{') return parse_json(s);
    return parse_text(s);
}

}  // namespace assoc
