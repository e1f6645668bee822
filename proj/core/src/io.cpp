#include "torix/io.hpp"

#include <algorithm>
#include <fstream>
#include <cctype>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "torix/errors.hpp"

namespace torix {

namespace {

using nlohmann::json;

struct Position {
    std::size_t line = 1, col = 1;
};

Position position_at(std::string_view text, std::size_t offset) {
    Position p;
    offset = std::min(offset, text.size());
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++p.line;
            p.col = 1;
        } else {
            ++p.col;
        }
    }
    return p;
}

// Offset of element `index` of the top-level array stored under `key`, or of
// the key itself when index is npos. Falls back to 0.
std::size_t locate(std::string_view text, const std::string& key, std::size_t index = std::string::npos) {
    std::size_t at = text.find("\"" + key + "\"");
    if (at == std::string_view::npos)
        return 0;
    if (index == std::string::npos)
        return at;
    std::size_t open = text.find('[', at);
    if (open == std::string_view::npos)
        return at;
    int depth = 0;
    std::size_t seen = 0;
    bool expecting = true;
    for (std::size_t i = open; i < text.size(); ++i) {
        char c = text[i];
        if (c == '[') {
            ++depth;
            if (depth == 2) {
                if (seen == index)
                    return i;
                ++seen;
            }
            continue;
        }
        if (c == ']') {
            if (--depth == 0)
                break;
            continue;
        }
        if (depth == 1) {
            if (c == ',') {
                expecting = true;
            } else if (expecting && c != ' ' && c != '\n' && c != '\t' && c != '\r') {
                if (seen == index)
                    return i;
                ++seen;
                expecting = false;
            }
        }
    }
    return at;
}

class FanReader {
public:
    FanReader(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

    [[noreturn]] void fail(std::size_t offset, const std::string& msg) const {
        Position p = position_at(text_, offset);
        throw InputError(source_ + ":" + std::to_string(p.line) + ":" + std::to_string(p.col) + ": " + msg);
    }

    Fan read() {
        json doc;
        try {
            doc = json::parse(text_.begin(), text_.end());
        } catch (const json::parse_error& e) {
            std::string what = e.what();
            auto cut = what.find("syntax error");
            fail(e.byte == 0 ? 0 : e.byte - 1, cut == std::string::npos ? what : what.substr(cut));
        }
        if (!doc.is_object())
            fail(0, "expected an object with keys \"rank\", \"rays\", \"max_cones\"");
        for (const auto& [key, value] : doc.items())
            if (key != "rank" && key != "rays" && key != "max_cones")
                fail(locate(text_, key), "unknown key \"" + key + "\"");
        for (const char* key : {"rank", "rays", "max_cones"})
            if (!doc.contains(key))
                fail(0, std::string("missing key \"") + key + "\"");

        const json& rank_node = doc["rank"];
        if (!rank_node.is_number_integer() || rank_node.get<long long>() < 1)
            fail(locate(text_, "rank"), "\"rank\" must be a positive integer");
        auto rank = static_cast<std::size_t>(rank_node.get<long long>());

        const json& rays_node = doc["rays"];
        if (!rays_node.is_array())
            fail(locate(text_, "rays"), "\"rays\" must be an array");
        if (rays_node.size() > 64)
            fail(locate(text_, "rays"), "at most 64 rays are supported");
        std::vector<LatticeVector> rays;
        for (std::size_t i = 0; i < rays_node.size(); ++i) {
            const json& r = rays_node[i];
            std::size_t at = locate(text_, "rays", i);
            if (!r.is_array() || r.size() != rank)
                fail(at, "rays[" + std::to_string(i) + "] must be an array of " + std::to_string(rank) +
                             " integers");
            LatticeVector v;
            for (const json& x : r) {
                if (!x.is_number_integer())
                    fail(at, "rays[" + std::to_string(i) + "] has a non-integer entry");
                v.push_back(x.get<Int>());
            }
            Int g = 0;
            for (Int x : v)
                g = gcd(g, x);
            if (g == 0)
                fail(at, "rays[" + std::to_string(i) + "] is zero");
            if (g != 1)
                fail(at, "rays[" + std::to_string(i) + "] [" + to_string(v) + "] is not primitive (gcd " +
                             std::to_string(g) + ")");
            rays.push_back(std::move(v));
        }

        const json& cones_node = doc["max_cones"];
        if (!cones_node.is_array())
            fail(locate(text_, "max_cones"), "\"max_cones\" must be an array");
        std::vector<Cone> cones;
        for (std::size_t i = 0; i < cones_node.size(); ++i) {
            const json& c = cones_node[i];
            std::size_t at = locate(text_, "max_cones", i);
            std::string name = "max_cones[" + std::to_string(i) + "]";
            if (!c.is_array() || c.empty())
                fail(at, name + " must be a nonempty array of ray indices");
            std::vector<std::size_t> idx;
            std::string shown = c.dump();
            for (const json& x : c) {
                if (!x.is_number_integer())
                    fail(at, name + " " + shown + ": non-integer ray index");
                long long k = x.get<long long>();
                if (k < 0 || static_cast<std::size_t>(k) >= rays.size())
                    fail(at, name + " " + shown + ": ray index " + std::to_string(k) + " out of range 0.." +
                                 std::to_string(static_cast<long long>(rays.size()) - 1));
                idx.push_back(static_cast<std::size_t>(k));
            }
            std::vector<std::size_t> sorted = idx;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                fail(at, name + " " + shown + ": repeated ray index");
            cones.emplace_back(std::move(idx));
        }
        try {
            return Fan::checked(rank, std::move(rays), std::move(cones));
        } catch (const DegenerateFanError& e) {
            throw DegenerateFanError(source_ + ": " + e.what());
        } catch (const InputError& e) {
            throw InputError(source_ + ": " + e.what());
        }
    }

private:
    std::string_view text_;
    std::string source_;
};

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

std::string vector_json(const IntVector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

} // namespace

Fan parse_fan(std::string_view text, const std::string& source) { return FanReader(text, source).read(); }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Fan read_fan_file(const std::string& path) { return parse_fan(read_text_file(path), path); }

std::string emit_fan(const Fan& fan) {
    std::vector<Cone> cones = fan.max_cones();
    std::sort(cones.begin(), cones.end());
    std::string s = "{\n  \"rank\": " + std::to_string(fan.rank()) + ",\n  \"rays\": [";
    for (std::size_t i = 0; i < fan.ray_count(); ++i)
        s += (i ? ", " : "") + vector_json(fan.ray(i));
    s += "],\n  \"max_cones\": [";
    for (std::size_t i = 0; i < cones.size(); ++i) {
        IntVector r(cones[i].rays().begin(), cones[i].rays().end());
        s += (i ? ", " : "") + vector_json(r);
    }
    return s + "]\n}\n";
}

QDivisor parse_divisor(std::string_view text, std::size_t rays, const std::string& source) {
    static const std::regex token(R"(^[+-]?[0-9]+(/[0-9]+)?$)");
    std::string body = trim(text);
    QDivisor d;
    std::size_t start = 0, column = 1;
    for (;;) {
        std::size_t comma = body.find(',', start);
        std::string raw = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::string t = trim(raw);
        std::string where = source + ":1:" + std::to_string(column) + ": ";
        if (!std::regex_match(t, token))
            throw InputError(where + "expected an integer or rational coefficient, got \"" + t + "\"");
        if (t[0] == '+')
            t.erase(0, 1);
        Rational q;
        try {
            q = Rational(t);
        } catch (const std::invalid_argument&) {
            throw InputError(where + "malformed coefficient \"" + t + "\"");
        }
        if (q.get_den() == 0)
            throw InputError(where + "zero denominator in \"" + t + "\"");
        q.canonicalize();
        d.coeffs.push_back(q);
        if (comma == std::string::npos)
            break;
        column += comma - start + 1;
        start = comma + 1;
    }
    if (d.coeffs.size() != rays)
        throw InputError(source + ": expected " + std::to_string(rays) + " coefficients (one per ray), got " +
                         std::to_string(d.coeffs.size()));
    return d;
}

WeilDivisor parse_weil_divisor(std::string_view text, std::size_t rays, const std::string& source) {
    QDivisor d = parse_divisor(text, rays, source);
    if (!d.is_integral())
        throw InputError(source + ": expected integer coefficients, got " + d.str());
    return d.to_weil();
}

std::string emit_divisor(const QDivisor& d) { return to_string(std::span<const Rational>(d.coeffs)); }

Cone parse_cone(std::string_view text, std::size_t rays) {
    std::string body = trim(text);
    if (!body.empty() && body.front() == '{' && body.back() == '}')
        body = body.substr(1, body.size() - 2);
    std::vector<std::size_t> idx;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::string t = trim(part);
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw InputError("cone \"" + std::string(text) + "\": expected comma-separated ray indices");
        std::size_t k = std::stoul(t);
        if (k >= rays)
            throw InputError("cone \"" + std::string(text) + "\": ray index " + t + " out of range 0.." +
                             std::to_string(rays - 1));
        idx.push_back(k);
    }
    if (idx.empty())
        throw InputError("cone \"" + std::string(text) + "\" is empty");
    return Cone(std::move(idx));
}

} // namespace torix
