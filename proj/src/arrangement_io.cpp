#include "burniat/arrangement_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace burniat {

namespace {

using nlohmann::json;

BigRat parse_rational(const json &j, const std::string &where)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer())
        throw std::invalid_argument(where + ": expected an integer pair [num, den]");
    long long num = j[0].get<long long>();
    long long den = j[1].get<long long>();
    if (den == 0) throw std::invalid_argument(where + ": zero denominator");
    return BigRat(BigInt(num), BigInt(den));
}

std::array<BigRat, 3> parse_triple(const json &j, const std::string &where)
{
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument(where + ": expected three rational coefficients");
    return {parse_rational(j[0], where + "[0]"), parse_rational(j[1], where + "[1]"),
            parse_rational(j[2], where + "[2]")};
}

json rational_to_json(const BigRat &q)
{
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    if (num < std::numeric_limits<long long>::min() ||
        num > std::numeric_limits<long long>::max() ||
        den > std::numeric_limits<long long>::max())
        throw std::invalid_argument("arrangement_to_json: coefficient exceeds 64-bit range");
    return json::array({static_cast<long long>(num), static_cast<long long>(den)});
}

} // namespace

BurniatArrangement parse_arrangement(const std::string &json_text)
{
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("arrangement: JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("arrangement: top level must be an object");
    if (!j.contains("base_points"))
        throw std::invalid_argument("arrangement: missing field 'base_points'");
    if (!j.contains("lines")) throw std::invalid_argument("arrangement: missing field 'lines'");

    const json &bp = j["base_points"];
    if (!bp.is_array() || bp.size() != 3)
        throw std::invalid_argument("base_points: expected exactly three points");

    BurniatArrangement arr;
    for (int i = 0; i < 3; ++i) {
        auto t = parse_triple(bp[i], "base_points[" + std::to_string(i) + "]");
        arr.base[i] = ProjPoint(t[0], t[1], t[2]);
    }

    const json &lines = j["lines"];
    if (!lines.is_object()) throw std::invalid_argument("lines: expected an object");
    for (int i = 1; i <= 3; ++i)
        for (int jj = 1; jj <= 3; ++jj) {
            std::string key = "D_" + std::to_string(i) + "_" + std::to_string(jj);
            if (!lines.contains(key))
                throw std::invalid_argument("lines: missing line '" + key + "'");
            auto t = parse_triple(lines[key], "lines." + key);
            arr.d[i - 1][jj - 1] = ProjLine(t[0], t[1], t[2]);
        }
    for (const auto &[key, value] : lines.items()) {
        (void)value;
        if (key.size() != 5 || key.compare(0, 2, "D_") != 0 || key[2] < '1' || key[2] > '3' ||
            key[3] != '_' || key[4] < '1' || key[4] > '3')
            throw std::invalid_argument("lines: unknown key '" + key + "'");
    }
    return arr;
}

BurniatArrangement load_arrangement_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open arrangement file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_arrangement(buf.str());
}

std::string arrangement_to_json(const BurniatArrangement &arr)
{
    json j;
    j["base_points"] = json::array();
    for (int i = 0; i < 3; ++i)
        j["base_points"].push_back(json::array({rational_to_json(arr.base[i].h[0]),
                                                rational_to_json(arr.base[i].h[1]),
                                                rational_to_json(arr.base[i].h[2])}));
    json lines = json::object();
    for (int i = 1; i <= 3; ++i)
        for (int jj = 1; jj <= 3; ++jj) {
            const ProjLine &l = arr.line(i, jj);
            lines["D_" + std::to_string(i) + "_" + std::to_string(jj)] =
                json::array({rational_to_json(l.c[0]), rational_to_json(l.c[1]),
                             rational_to_json(l.c[2])});
        }
    j["lines"] = lines;
    return j.dump(2) + "\n";
}

} // namespace burniat
