#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "ramicalc/error.hpp"

namespace ramicalc {

class Subgroup;

/*
 * A finite group of order <= 512 given by its multiplication table.
 * Associativity, identity and inverses are verified at construction.
 * Element 0 need not be the identity for table input; the identity index
 * is located and stored.
 */
class FiniteGroup {
  public:
    static constexpr std::size_t kMaxOrder = 512;

    explicit FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
        const std::size_t n = table_.size();
        if (n == 0 || n > kMaxOrder)
            throw Error(errc::bad_group_table, "order must be in [1, 512]");
        for (const auto& row : table_) {
            if (row.size() != n) throw Error(errc::bad_group_table, "table not square");
            for (int x : row)
                if (x < 0 || static_cast<std::size_t>(x) >= n)
                    throw Error(errc::bad_group_table, "entry out of range");
        }
        identity_ = -1;
        for (std::size_t e = 0; e < n; ++e) {
            bool ok = true;
            for (std::size_t x = 0; x < n && ok; ++x)
                ok = table_[e][x] == static_cast<int>(x) && table_[x][e] == static_cast<int>(x);
            if (ok) {
                identity_ = static_cast<int>(e);
                break;
            }
        }
        if (identity_ < 0) throw Error(errc::bad_group_table, "no identity element");
        inverse_.assign(n, -1);
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y)
                if (table_[x][y] == identity_ && table_[y][x] == identity_) {
                    inverse_[x] = static_cast<int>(y);
                    break;
                }
            if (inverse_[x] < 0) throw Error(errc::bad_group_table, "missing inverse");
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw Error(errc::bad_group_table, "not associative");
    }

    std::size_t order() const { return table_.size(); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    int conj(int t, int s) const { return mul(mul(t, s), inv(t)); }  // t s t^{-1}
    const std::vector<std::vector<int>>& table() const { return table_; }

    static FiniteGroup trivial() { return cyclic(1); }

    static FiniteGroup cyclic(long n) {
        check_order(n);
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b) t[a][b] = static_cast<int>((a + b) % n);
        return FiniteGroup(std::move(t));
    }

    /* (Z/p)^k */
    static FiniteGroup elementary_abelian(long p, long k) {
        long n = 1;
        for (long i = 0; i < k; ++i) n *= p;
        check_order(n);
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b) {
                long x = a, y = b, r = 0, q = 1;
                for (long i = 0; i < k; ++i) {
                    r += ((x % p + y % p) % p) * q;
                    x /= p;
                    y /= p;
                    q *= p;
                }
                t[a][b] = static_cast<int>(r);
            }
        return FiniteGroup(std::move(t));
    }

    /* order 2n; elements r^i s^j, j in {0,1}, s r s = r^{-1} */
    static FiniteGroup dihedral(long n) {
        check_order(2 * n);
        auto enc = [n](long i, long j) { return static_cast<int>(j * n + ((i % n) + n) % n); };
        std::vector<std::vector<int>> t(2 * n, std::vector<int>(2 * n));
        for (long i1 = 0; i1 < n; ++i1)
            for (long j1 = 0; j1 < 2; ++j1)
                for (long i2 = 0; i2 < n; ++i2)
                    for (long j2 = 0; j2 < 2; ++j2) {
                        long i = j1 == 0 ? i1 + i2 : i1 - i2;
                        t[enc(i1, j1)][enc(i2, j2)] = enc(i, (j1 + j2) % 2);
                    }
        return FiniteGroup(std::move(t));
    }

    static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
        std::size_t n = g.order() * h.order();
        check_order(static_cast<long>(n));
        auto enc = [&](int a, int b) { return static_cast<int>(a * h.order() + b); };
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                int a1 = static_cast<int>(x / h.order()), b1 = static_cast<int>(x % h.order());
                int a2 = static_cast<int>(y / h.order()), b2 = static_cast<int>(y % h.order());
                t[x][y] = enc(g.mul(a1, a2), h.mul(b1, b2));
            }
        return FiniteGroup(std::move(t));
    }

  private:
    static void check_order(long n) {
        if (n < 1 || n > static_cast<long>(kMaxOrder))
            throw Error(errc::bad_group_table, "order must be in [1, 512]");
    }

    std::vector<std::vector<int>> table_;
    int identity_ = 0;
    std::vector<int> inverse_;
};

/* Membership bitset over a parent group. */
class Subgroup {
  public:
    Subgroup(const FiniteGroup& g, std::vector<bool> member)
        : member_(std::move(member)) {
        if (member_.size() != g.order())
            throw Error(errc::not_a_subgroup, "mask size mismatch");
        if (!member_[g.identity()])
            throw Error(errc::not_a_subgroup, "identity not contained");
        for (std::size_t a = 0; a < member_.size(); ++a) {
            if (!member_[a]) continue;
            if (!member_[g.inv(static_cast<int>(a))])
                throw Error(errc::not_a_subgroup, "not closed under inverse");
            for (std::size_t b = 0; b < member_.size(); ++b)
                if (member_[b] && !member_[g.mul(static_cast<int>(a), static_cast<int>(b))])
                    throw Error(errc::not_a_subgroup, "not closed under product");
        }
        size_ = std::count(member_.begin(), member_.end(), true);
    }

    static Subgroup trivial(const FiniteGroup& g) {
        std::vector<bool> m(g.order(), false);
        m[g.identity()] = true;
        return Subgroup(g, std::move(m));
    }
    static Subgroup whole(const FiniteGroup& g) {
        return Subgroup(g, std::vector<bool>(g.order(), true));
    }
    static Subgroup from_elements(const FiniteGroup& g, const std::vector<int>& elems) {
        std::vector<bool> m(g.order(), false);
        for (int e : elems) {
            if (e < 0 || static_cast<std::size_t>(e) >= g.order())
                throw Error(errc::not_a_subgroup, "element index out of range");
            m[e] = true;
        }
        return Subgroup(g, std::move(m));
    }
    /* closure of a generating set */
    static Subgroup generated(const FiniteGroup& g, const std::vector<int>& gens) {
        std::vector<bool> m(g.order(), false);
        m[g.identity()] = true;
        std::vector<int> stack{g.identity()};
        for (int x : gens)
            if (!m[x]) {
                m[x] = true;
                stack.push_back(x);
            }
        // close under products with generators and inverses
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t a = 0; a < m.size(); ++a) {
                if (!m[a]) continue;
                int ia = g.inv(static_cast<int>(a));
                if (!m[ia]) { m[ia] = true; grew = true; }
                for (std::size_t b = 0; b < m.size(); ++b) {
                    if (!m[b]) continue;
                    int ab = g.mul(static_cast<int>(a), static_cast<int>(b));
                    if (!m[ab]) { m[ab] = true; grew = true; }
                }
            }
        }
        return Subgroup(g, std::move(m));
    }

    bool contains(int x) const { return member_[x]; }
    std::size_t size() const { return size_; }
    const std::vector<bool>& mask() const { return member_; }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < member_.size(); ++i)
            if (member_[i]) out.push_back(static_cast<int>(i));
        return out;
    }

    bool operator==(const Subgroup& o) const { return member_ == o.member_; }
    bool subset_of(const Subgroup& o) const {
        for (std::size_t i = 0; i < member_.size(); ++i)
            if (member_[i] && !o.member_[i]) return false;
        return true;
    }

    bool is_normal(const FiniteGroup& g) const {
        for (std::size_t t = 0; t < g.order(); ++t)
            for (std::size_t s = 0; s < member_.size(); ++s)
                if (member_[s] && !member_[g.conj(static_cast<int>(t), static_cast<int>(s))])
                    return false;
        return true;
    }

    /* the set product H * K (a subgroup whenever one factor is normal) */
    static Subgroup product(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
        std::vector<bool> m(g.order(), false);
        for (std::size_t a = 0; a < g.order(); ++a) {
            if (!h.member_[a]) continue;
            for (std::size_t b = 0; b < g.order(); ++b)
                if (k.member_[b]) m[g.mul(static_cast<int>(a), static_cast<int>(b))] = true;
        }
        return Subgroup(g, std::move(m));
    }

    static Subgroup intersect(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
        std::vector<bool> m(g.order(), false);
        for (std::size_t i = 0; i < g.order(); ++i) m[i] = h.member_[i] && k.member_[i];
        return Subgroup(g, std::move(m));
    }

    Subgroup conjugate(const FiniteGroup& g, int t) const {
        std::vector<bool> m(g.order(), false);
        for (std::size_t s = 0; s < member_.size(); ++s)
            if (member_[s]) m[g.conj(t, static_cast<int>(s))] = true;
        return Subgroup(g, std::move(m));
    }

  private:
    std::vector<bool> member_;
    std::size_t size_ = 0;
};

}  // namespace ramicalc
