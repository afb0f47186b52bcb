#include "burniat/gamma_bar.hpp"

#include <map>
#include <stdexcept>

namespace burniat {

namespace {

std::uint8_t m4(const BigInt &x)
{
    return static_cast<std::uint8_t>(static_cast<int>(((x % 4) + 4) % 4));
}

std::uint8_t sign_act(std::int8_t s, std::uint8_t r)
{
    return s == 1 ? r : static_cast<std::uint8_t>((4 - r) % 4);
}

} // namespace

QuotElement QuotElement::from_affine(const AffineMap &m)
{
    QuotElement q;
    for (int i = 0; i < 3; ++i) q.sign[i] = static_cast<std::int8_t>(m.linear.s[i]);
    for (int i = 0; i < 6; ++i) q.t[i] = m4(m.translation.num[i]);
    return q;
}

QuotElement QuotElement::mul(const QuotElement &o) const
{
    QuotElement r;
    for (int i = 0; i < 3; ++i) r.sign[i] = static_cast<std::int8_t>(sign[i] * o.sign[i]);
    for (int i = 0; i < 3; ++i) {
        r.t[i] = static_cast<std::uint8_t>((sign_act(sign[i], o.t[i]) + t[i]) % 4);
        r.t[i + 3] = static_cast<std::uint8_t>((sign_act(sign[i], o.t[i + 3]) + t[i + 3]) % 4);
    }
    return r;
}

QuotElement QuotElement::inv() const
{
    QuotElement r;
    r.sign = sign;
    for (int i = 0; i < 3; ++i) {
        r.t[i] = static_cast<std::uint8_t>((4 - sign_act(sign[i], t[i])) % 4);
        r.t[i + 3] = static_cast<std::uint8_t>((4 - sign_act(sign[i], t[i + 3])) % 4);
    }
    return r;
}

bool QuotElement::is_lattice_translation() const
{
    if (sign[0] != 1 || sign[1] != 1 || sign[2] != 1) return false;
    for (int i = 0; i < 6; ++i)
        if (t[i] % 2 != 0) return false;
    return true;
}

int GammaBarGroup::index_of(const QuotElement &q) const
{
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == q) return static_cast<int>(i);
    throw std::invalid_argument("GammaBarGroup: element not found");
}

GammaBarGroup enumerate_gamma_bar()
{
    GammaSystem gs = build_gamma();
    std::vector<QuotElement> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(QuotElement::from_affine(gs.gamma[i]));
    for (int i = 3; i < 6; ++i) gens.push_back(QuotElement::from_affine(gs.lattice[i]));

    // breadth-first closure
    std::map<QuotElement, int> index;
    std::vector<QuotElement> elems;
    QuotElement e; // identity
    index[e] = 0;
    elems.push_back(e);
    for (std::size_t head = 0; head < elems.size(); ++head) {
        QuotElement cur = elems[head];
        for (const auto &g : gens) {
            for (QuotElement nxt : {cur.mul(g), cur.mul(g.inv())}) {
                if (!index.count(nxt)) {
                    index[nxt] = static_cast<int>(elems.size());
                    elems.push_back(nxt);
                }
            }
        }
    }

    GammaBarGroup out;
    out.elements = elems;
    const int n = static_cast<int>(elems.size());
    out.table.mul.assign(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out.table.mul[a][b] = index.at(elems[a].mul(elems[b]));
    out.table.identity = index.at(e);

    for (int i = 0; i < 3; ++i) out.gamma[i] = index.at(QuotElement::from_affine(gs.gamma[i]));
    for (int i = 0; i < 6; ++i) out.lattice[i] = index.at(QuotElement::from_affine(gs.lattice[i]));
    for (int a = 0; a < n; ++a)
        if (elems[a].is_lattice_translation()) out.lattice_subgroup.push_back(a);
    return out;
}

} // namespace burniat
