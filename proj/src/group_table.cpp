#include "burniat/group_table.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace burniat {

int FiniteGroupTable::inverse(int a) const
{
    for (int b = 0; b < n(); ++b)
        if (mul[a][b] == identity) return b;
    throw std::logic_error("FiniteGroupTable: element without inverse");
}

int FiniteGroupTable::element_order(int a) const
{
    int x = a, ord = 1;
    while (x != identity) {
        x = mul[x][a];
        ++ord;
        if (ord > n()) throw std::logic_error("FiniteGroupTable: order overflow");
    }
    return ord;
}

void FiniteGroupTable::validate() const
{
    const int m = n();
    if (m == 0 || 512 % m != 0)
        throw std::logic_error("FiniteGroupTable: order must divide 512");
    for (int a = 0; a < m; ++a) {
        if (static_cast<int>(mul[a].size()) != m)
            throw std::logic_error("FiniteGroupTable: ragged table");
        if (mul[identity][a] != a || mul[a][identity] != a)
            throw std::logic_error("FiniteGroupTable: identity fails");
        for (int b = 0; b < m; ++b)
            if (mul[a][b] < 0 || mul[a][b] >= m)
                throw std::logic_error("FiniteGroupTable: entry out of range");
    }
    for (int a = 0; a < m; ++a) inverse(a); // throws if missing
    // associativity spot check is implied by construction everywhere we build
    // tables; full check is O(n^3) and still cheap at n <= 512
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw std::logic_error("FiniteGroupTable: not associative");
}

bool FiniteGroupTable::is_abelian() const
{
    for (int a = 0; a < n(); ++a)
        for (int b = a + 1; b < n(); ++b)
            if (mul[a][b] != mul[b][a]) return false;
    return true;
}

int FiniteGroupTable::exponent() const
{
    int e = 1;
    for (int a = 0; a < n(); ++a) e = std::lcm(e, element_order(a));
    return e;
}

std::vector<int> FiniteGroupTable::center() const
{
    std::vector<int> z;
    for (int a = 0; a < n(); ++a) {
        bool central = true;
        for (int b = 0; b < n() && central; ++b) central = mul[a][b] == mul[b][a];
        if (central) z.push_back(a);
    }
    return z;
}

std::vector<int> FiniteGroupTable::generated_subgroup(std::vector<int> seeds) const
{
    std::set<int> sub = {identity};
    for (int s : seeds) {
        if (s < 0 || s >= n())
            throw std::invalid_argument("generated_subgroup: seed not in group");
        sub.insert(s);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(sub.begin(), sub.end());
        for (int a : cur)
            for (int b : cur)
                if (sub.insert(mul[a][b]).second) grew = true;
        for (int a : cur)
            if (sub.insert(inverse(a)).second) grew = true;
    }
    return {sub.begin(), sub.end()};
}

std::vector<int> FiniteGroupTable::commutator_subgroup() const
{
    std::vector<int> comms;
    for (int a = 0; a < n(); ++a)
        for (int b = 0; b < n(); ++b)
            comms.push_back(mul[mul[a][b]][inverse(mul[b][a])]);
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return generated_subgroup(comms);
}

std::vector<int> normal_closure(const FiniteGroupTable &g, const std::vector<int> &seeds)
{
    for (int s : seeds)
        if (s < 0 || s >= g.n())
            throw std::invalid_argument("normal_closure: seed not in group");
    std::set<int> sub(seeds.begin(), seeds.end());
    sub.insert(g.identity);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(sub.begin(), sub.end());
        // close under conjugation, then under the group operations
        for (int x : cur)
            for (int h = 0; h < g.n(); ++h)
                if (sub.insert(g.conjugate(h, x)).second) grew = true;
        cur.assign(sub.begin(), sub.end());
        for (int a : cur) {
            if (sub.insert(g.inverse(a)).second) grew = true;
            for (int b : cur)
                if (sub.insert(g.mul[a][b]).second) grew = true;
        }
    }
    return {sub.begin(), sub.end()};
}

bool is_normal(const FiniteGroupTable &g, const std::vector<int> &subgroup)
{
    std::set<int> sub(subgroup.begin(), subgroup.end());
    for (int x : subgroup)
        for (int h = 0; h < g.n(); ++h)
            if (!sub.count(g.conjugate(h, x))) return false;
    return true;
}

QuotientResult quotient(const FiniteGroupTable &g, const std::vector<int> &normal_subgroup)
{
    if (!is_normal(g, normal_subgroup))
        throw std::invalid_argument("quotient: subgroup is not normal");
    std::set<int> nset(normal_subgroup.begin(), normal_subgroup.end());
    if (!nset.count(g.identity))
        throw std::invalid_argument("quotient: subgroup misses the identity");

    // canonical coset representative: minimal element index of gN
    std::vector<int> rep(g.n(), -1);
    std::vector<int> reps;
    for (int a = 0; a < g.n(); ++a) {
        if (rep[a] >= 0) continue;
        std::vector<int> coset;
        for (int h : normal_subgroup) coset.push_back(g.mul[a][h]);
        int m = *std::min_element(coset.begin(), coset.end());
        for (int c : coset) rep[c] = m;
    }
    std::vector<int> index_of(g.n(), -1);
    for (int a = 0; a < g.n(); ++a)
        if (rep[a] == a) {
            index_of[a] = static_cast<int>(reps.size());
            reps.push_back(a);
        }

    QuotientResult out;
    const int q = static_cast<int>(reps.size());
    out.group.mul.assign(q, std::vector<int>(q, 0));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            out.group.mul[i][j] = index_of[rep[g.mul[reps[i]][reps[j]]]];
    out.group.identity = index_of[rep[g.identity]];
    out.projection.resize(g.n());
    for (int a = 0; a < g.n(); ++a) out.projection[a] = index_of[rep[a]];
    return out;
}

AbelianInvariants table_abelianization(const FiniteGroupTable &g)
{
    auto derived = g.commutator_subgroup();
    FiniteGroupTable ab = quotient(g, derived).group;

    // Abelian 2-group: the counts N_k = #{x : x^(2^k) = 1} determine the
    // exponent partition, N_k = 2^(sum_i min(k, e_i)).
    if ((g.n() & (g.n() - 1)) != 0)
        throw std::logic_error("table_abelianization: order is not a 2-power");
    std::vector<int> ords;
    for (int a = 0; a < ab.n(); ++a) ords.push_back(ab.element_order(a));
    int maxk = 0;
    while ((1 << maxk) < *std::max_element(ords.begin(), ords.end())) ++maxk;

    std::vector<int> logN(maxk + 1, 0); // log2 of N_k
    for (int k = 0; k <= maxk; ++k) {
        int cnt = 0;
        for (int o : ords)
            if (o <= (1 << k)) ++cnt;
        int lg = 0;
        while ((1 << lg) < cnt) ++lg;
        if ((1 << lg) != cnt)
            throw std::logic_error("table_abelianization: counts not a 2-power");
        logN[k] = lg;
    }
    // s_k := logN[k] - logN[k-1] = #{i : e_i >= k}; exponents recovered as
    // multiplicities of the conjugate partition.
    std::vector<int> s;
    for (int k = 1; k <= maxk; ++k) s.push_back(logN[k] - logN[k - 1]);
    AbelianInvariants inv;
    // number of factors with e_i = k is s_k - s_{k+1}
    std::vector<int> exps;
    for (int k = 1; k <= maxk; ++k) {
        int cnt = s[k - 1] - (k < maxk ? s[k] : 0);
        for (int c = 0; c < cnt; ++c) exps.push_back(k);
    }
    std::sort(exps.begin(), exps.end()); // divisibility order
    for (int e : exps) inv.torsion.push_back(BigInt(1) << e);
    return inv;
}

GroupFingerprint fingerprint(const FiniteGroupTable &g)
{
    GroupFingerprint fp;
    fp.order = g.n();
    for (int a = 0; a < g.n(); ++a) fp.order_histogram[g.element_order(a)]++;
    fp.abelianization = table_abelianization(g);
    fp.commutator_order = static_cast<int>(g.commutator_subgroup().size());
    fp.center_order = static_cast<int>(g.center().size());
    fp.exponent = g.exponent();
    return fp;
}

std::string GroupFingerprint::to_string() const
{
    std::ostringstream os;
    os << "order " << order << ", orders {";
    bool first = true;
    for (const auto &[o, c] : order_histogram) {
        os << (first ? "" : ", ") << o << ":" << c;
        first = false;
    }
    os << "}, ab " << abelianization.to_string() << ", |G'| " << commutator_order
       << ", |Z| " << center_order << ", exp " << exponent;
    return os.str();
}

FiniteGroupTable quaternion_table()
{
    // elements 0..7 = 1, -1, i, -i, j, -j, k, -k
    auto enc = [](int unit, int sign) { return 2 * unit + (sign < 0 ? 1 : 0); };
    FiniteGroupTable q;
    q.mul.assign(8, std::vector<int>(8, 0));
    // unit products with signs: table over {1,i,j,k}
    static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_mul[4][4] = {
        {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = a / 2, sa = a % 2 ? -1 : 1;
            int ub = b / 2, sb = b % 2 ? -1 : 1;
            q.mul[a][b] = enc(unit_mul[ua][ub], sa * sb * sign_mul[ua][ub]);
        }
    q.identity = 0;
    return q;
}

FiniteGroupTable dihedral8_table()
{
    // r^4 = 1, s^2 = 1, s r s = r^-1; elements r^a s^b, index 2a + b
    FiniteGroupTable d;
    d.mul.assign(8, std::vector<int>(8, 0));
    for (int a1 = 0; a1 < 4; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int a2 = 0; a2 < 4; ++a2)
                for (int b2 = 0; b2 < 2; ++b2) {
                    // (r^a1 s^b1)(r^a2 s^b2) = r^(a1 + a2 * (-1)^b1) s^(b1+b2)
                    int a = ((a1 + (b1 ? 4 - a2 : a2)) % 4);
                    int b = (b1 + b2) % 2;
                    d.mul[2 * a1 + b1][2 * a2 + b2] = 2 * a + b;
                }
    d.identity = 0;
    return d;
}

FiniteGroupTable elementary_abelian_table(int k)
{
    const int m = 1 << k;
    FiniteGroupTable t;
    t.mul.assign(m, std::vector<int>(m, 0));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) t.mul[a][b] = a ^ b;
    t.identity = 0;
    return t;
}

FiniteGroupTable direct_product(const FiniteGroupTable &a, const FiniteGroupTable &b)
{
    FiniteGroupTable t;
    const int n = a.n() * b.n();
    t.mul.assign(n, std::vector<int>(n, 0));
    auto enc = [&](int x, int y) { return x * b.n() + y; };
    for (int x1 = 0; x1 < a.n(); ++x1)
        for (int y1 = 0; y1 < b.n(); ++y1)
            for (int x2 = 0; x2 < a.n(); ++x2)
                for (int y2 = 0; y2 < b.n(); ++y2)
                    t.mul[enc(x1, y1)][enc(x2, y2)] = enc(a.mul[x1][x2], b.mul[y1][y2]);
    t.identity = enc(a.identity, b.identity);
    return t;
}

FiniteGroupTable relabel(const FiniteGroupTable &g, const std::vector<int> &perm)
{
    FiniteGroupTable t;
    t.mul.assign(g.n(), std::vector<int>(g.n(), 0));
    for (int a = 0; a < g.n(); ++a)
        for (int b = 0; b < g.n(); ++b) t.mul[perm[a]][perm[b]] = perm[g.mul[a][b]];
    t.identity = perm[g.identity];
    return t;
}

std::optional<QuaternionWitness> find_quaternion_witness(const FiniteGroupTable &g)
{
    const int n = g.n();
    if (n < 8 || (n & (n - 1)) != 0) return std::nullopt;

    auto center = g.center();
    std::set<int> zset(center.begin(), center.end());

    for (int x = 0; x < n; ++x) {
        if (g.element_order(x) != 4) continue;
        const int x2 = g.mul[x][x];
        const int xinv = g.inverse(x);
        for (int y = 0; y < n; ++y) {
            if (g.element_order(y) != 4) continue;
            if (g.mul[y][y] != x2) continue;
            if (g.conjugate(y, x) != xinv) continue;
            auto h = g.generated_subgroup({x, y});
            if (h.size() != 8) continue;

            // extend by central involutions to a direct product covering G
            std::set<int> cur(h.begin(), h.end());
            std::vector<int> factors;
            bool grew = true;
            while (static_cast<int>(cur.size()) < n && grew) {
                grew = false;
                for (int z : center) {
                    if (cur.count(z) || g.element_order(z) != 2) continue;
                    std::set<int> next;
                    for (int c : cur) {
                        next.insert(c);
                        next.insert(g.mul[c][z]);
                    }
                    if (next.size() == 2 * cur.size()) {
                        cur = std::move(next);
                        factors.push_back(z);
                        grew = true;
                        break;
                    }
                }
            }
            if (static_cast<int>(cur.size()) == n)
                return QuaternionWitness{x, y, factors};
        }
    }
    return std::nullopt;
}

namespace {

int int_log2(const BigInt &v)
{
    int k = 0;
    BigInt x = v;
    while (x > 1) {
        x >>= 1;
        ++k;
    }
    return k;
}

// Full isomorphism check for the direct-product witness map
// H x (Z/2)^k -> G given by (q, v) -> phi(q) * prod z_i^{v_i}.
bool witness_is_isomorphism(const FiniteGroupTable &g, const QuaternionWitness &w)
{
    FiniteGroupTable h = quaternion_table();
    const int k = static_cast<int>(w.central_factors.size());
    // images of 1,-1,i,-i,j,-j,k,-k built from image_i, image_j
    std::vector<int> img(8);
    img[0] = g.identity;
    img[2] = w.image_i;
    img[4] = w.image_j;
    img[1] = g.mul[w.image_i][w.image_i];       // -1 = i^2
    img[3] = g.mul[img[1]][w.image_i];          // -i
    img[5] = g.mul[img[1]][w.image_j];          // -j
    img[6] = g.mul[w.image_i][w.image_j];       // k = ij
    img[7] = g.mul[img[1]][img[6]];             // -k
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            if (g.mul[img[a]][img[b]] != img[h.mul[a][b]]) return false;

    std::vector<int> full;
    const int total = 8 << k;
    if (total != g.n()) return false;
    for (int code = 0; code < total; ++code) {
        int q = code & 7;
        int e = img[q];
        for (int t = 0; t < k; ++t)
            if (code & (8 << t)) e = g.mul[e][w.central_factors[t]];
        full.push_back(e);
    }
    std::set<int> distinct(full.begin(), full.end());
    if (static_cast<int>(distinct.size()) != g.n()) return false;
    for (int t = 0; t < k; ++t) {
        int z = w.central_factors[t];
        if (g.element_order(z) != 2) return false;
        for (int a = 0; a < g.n(); ++a)
            if (g.mul[z][a] != g.mul[a][z]) return false;
    }
    return true;
}

} // namespace

IsoClass classify(const FiniteGroupTable &g)
{
    IsoClass out;
    out.fp = fingerprint(g);

    if (g.is_abelian() && g.exponent() <= 2) {
        out.tag = IsoClass::Tag::ElementaryAbelian;
        out.k = int_log2(out.fp.order);
        return out;
    }

    if (g.n() % 8 == 0 && (g.n() & (g.n() - 1)) == 0) {
        const int k = int_log2(out.fp.order) - 3;
        FiniteGroupTable ref = quaternion_table();
        if (k > 0) ref = direct_product(ref, elementary_abelian_table(k));
        if (fingerprint(ref) == out.fp) {
            auto w = find_quaternion_witness(g);
            if (w && static_cast<int>(w->central_factors.size()) == k &&
                witness_is_isomorphism(g, *w)) {
                out.tag = IsoClass::Tag::QuaternionTimesElementaryAbelian;
                out.k = k;
                return out;
            }
        }
    }

    out.tag = IsoClass::Tag::Other;
    return out;
}

std::string IsoClass::to_string() const
{
    std::ostringstream os;
    switch (tag) {
    case Tag::ElementaryAbelian:
        if (k == 0) return "1";
        os << "(Z/2)^" << k;
        return os.str();
    case Tag::QuaternionTimesElementaryAbelian:
        os << "H";
        if (k > 0) os << " x (Z/2)^" << k;
        return os.str();
    case Tag::Other:
        return "Other(" + fp.to_string() + ")";
    }
    return "?";
}

} // namespace burniat
