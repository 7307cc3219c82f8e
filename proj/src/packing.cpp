#include "spc/packing.hpp"

#include <sstream>

#include "spc/errors.hpp"

namespace spc {

SSequence make_sequence(std::vector<int> values)
{
    if (values.empty())
        fail(ErrorKind::bad_sequence, "empty sequence");
    for (size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 1)
            fail(ErrorKind::bad_sequence, "non-positive entry " + std::to_string(values[i]));
        if (i > 0 && values[i] < values[i - 1])
            fail(ErrorKind::bad_sequence, "sequence not non-decreasing");
    }
    return SSequence{std::move(values)};
}

SSequence parse_sequence(const std::string& text)
{
    std::vector<int> values;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(token, &pos);
            while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos])))
                ++pos;
            if (pos != token.size())
                fail(ErrorKind::bad_sequence, "bad token '" + token + "'");
            values.push_back(v);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail(ErrorKind::bad_sequence, "bad token '" + token + "'");
        }
    }
    return make_sequence(std::move(values));
}

std::string to_string(const SSequence& s)
{
    std::string out;
    for (size_t i = 0; i < s.values.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(s.values[i]);
    }
    return out;
}

VerifyResult verify(const Graph& g, const DistanceMatrix& dm, const SSequence& s,
                    const PackingColoring& c)
{
    if (c.n() != g.n())
        fail(ErrorKind::incomplete_coloring,
             "coloring covers " + std::to_string(c.n()) + " of " + std::to_string(g.n()) +
                 " vertices");
    for (int v = 0; v < g.n(); ++v)
        if (c.at(v) < 1 || c.at(v) > s.k())
            fail(ErrorKind::incomplete_coloring,
                 "vertex " + std::to_string(v) + " has class " + std::to_string(c.at(v)) +
                     " outside 1.." + std::to_string(s.k()));

    VerifyResult res;
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            if (c.at(u) != c.at(v))
                continue;
            int bound = s.at(c.at(u));
            int d = dm.at(u, v);
            if (d != kInfDist && d <= bound)
                res.violations.push_back({c.at(u), u, v, d});
        }
    }
    res.valid = res.violations.empty();
    return res;
}

VerifyResult verify(const Graph& g, const SSequence& s, const PackingColoring& c)
{
    DistanceMatrix dm(g);
    return verify(g, dm, s, c);
}

bool refines(const SSequence& a, const SSequence& b)
{
    if (a.k() != b.k())
        return false;
    for (int i = 0; i < a.k(); ++i)
        if (a.values[i] < b.values[i])
            return false;
    return true;
}

} // namespace spc
