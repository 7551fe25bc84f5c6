#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <alphacert/polynomial.hpp>

namespace alphacert {

// Counts (m, k, l, q, u, w) partitioning variables into one shared block of
// size m and k+2l repeated blocks of size q, with u leading polynomials in
// the shared variables and w polynomials per repeated block.
struct BlockStructure {
    std::size_t m = 0;
    std::size_t k = 0;
    std::size_t ell = 0;
    std::size_t q = 0;
    std::size_t u = 0;
    std::size_t w = 0;

    std::size_t block_count() const { return k + 2 * ell; }
    std::size_t ambient_dimension() const { return m + block_count() * q; }
    std::size_t polynomial_count() const { return u + block_count() * w; }

    // Both count conditions: the shared block is not over-constrained and
    // the whole system is square.
    bool counts_consistent() const {
        return u <= m && ambient_dimension() == polynomial_count();
    }

    friend bool operator==(const BlockStructure&, const BlockStructure&) = default;
};

struct StructureValidation {
    bool counts_ok = false;
    bool shared_block_ok = false; // first u polynomials touch only the first m variables
    bool blocks_identical_ok = false;
    std::optional<std::size_t> offending_polynomial;
    std::string message;

    bool pass() const { return counts_ok && shared_block_ok && blocks_identical_ok; }
};

namespace detail {

// Variable map sending the shared block to itself and repeated block `j`
// onto block 0; everything else is forbidden.
inline std::vector<std::size_t> block_to_front_map(const BlockStructure& bs, std::size_t j) {
    std::vector<std::size_t> map(bs.ambient_dimension(), Polynomial::npos);
    for (std::size_t v = 0; v < bs.m; ++v)
        map[v] = v;
    for (std::size_t t = 0; t < bs.q; ++t)
        map[bs.m + j * bs.q + t] = bs.m + t;
    return map;
}

} // namespace detail

// Checks that `f` has the declared block shape: counts consistent, the
// first u polynomials only involve the shared variables, and all k+2l
// polynomial blocks are literally identical after renaming block variables.
inline StructureValidation validate_block_structure(const PolynomialSystem& f,
                                                    const BlockStructure& bs) {
    StructureValidation v;
    v.counts_ok = bs.counts_consistent() && f.nvars() == bs.ambient_dimension() &&
                  f.size() == bs.polynomial_count();
    if (!v.counts_ok) {
        v.message = "count conditions failed: need u <= m, m + (k+2l)q = u + (k+2l)w, "
                    "and matching system dimensions";
        return v;
    }

    v.shared_block_ok = true;
    for (std::size_t i = 0; i < bs.u; ++i) {
        for (const auto& t : f[i].terms()) {
            for (std::size_t var = bs.m; var < f.nvars(); ++var) {
                if (t.exps[var] != 0) {
                    v.shared_block_ok = false;
                    v.offending_polynomial = i;
                    v.message = "polynomial " + std::to_string(i) +
                                " uses variables outside the shared block";
                    return v;
                }
            }
        }
    }

    v.blocks_identical_ok = true;
    if (bs.block_count() == 0)
        return v;

    std::vector<Polynomial> reference;
    for (std::size_t j = 0; j < bs.block_count(); ++j) {
        auto map = detail::block_to_front_map(bs, j);
        for (std::size_t r = 0; r < bs.w; ++r) {
            std::size_t idx = bs.u + j * bs.w + r;
            Polynomial remapped(f.nvars());
            if (!f[idx].remapped(map, f.nvars(), remapped)) {
                v.blocks_identical_ok = false;
                v.offending_polynomial = idx;
                v.message = "polynomial " + std::to_string(idx) +
                            " uses variables outside its own block";
                return v;
            }
            if (j == 0) {
                reference.push_back(std::move(remapped));
            } else if (!(remapped == reference[r])) {
                v.blocks_identical_ok = false;
                v.offending_polynomial = idx;
                v.message = "polynomial " + std::to_string(idx) +
                            " differs from block 0 after renaming";
                return v;
            }
        }
    }
    return v;
}

// Builds the structured system from g (in the m shared variables) and
// p (in m + q variables): g, then k+2l renamed copies of p over fresh
// variable blocks.
inline std::pair<PolynomialSystem, BlockStructure>
assemble_structured(const PolynomialSystem& g, const PolynomialSystem& p, std::size_t k,
                    std::size_t ell) {
    BlockStructure bs;
    bs.m = g.nvars();
    bs.u = g.size();
    bs.k = k;
    bs.ell = ell;
    if (p.nvars() < bs.m)
        throw StructureArithmetic("p must include the shared variables of g");
    bs.q = p.nvars() - bs.m;
    bs.w = p.size();
    if (!bs.counts_consistent())
        throw StructureArithmetic("count conditions failed for (m,k,l,q,u,w) = (" +
                                  std::to_string(bs.m) + "," + std::to_string(bs.k) + "," +
                                  std::to_string(bs.ell) + "," + std::to_string(bs.q) + "," +
                                  std::to_string(bs.u) + "," + std::to_string(bs.w) + ")");

    std::size_t n = bs.ambient_dimension();
    std::vector<std::string> vars = g.variable_names();
    vars.resize(n);
    for (std::size_t j = 0; j < bs.block_count(); ++j) {
        std::string suffix = j < bs.k ? "_b" + std::to_string(j + 1)
                     : j < bs.k + bs.ell ? "_c" + std::to_string(j - bs.k + 1)
                                         : "_d" + std::to_string(j - bs.k - bs.ell + 1);
        for (std::size_t t = 0; t < bs.q; ++t)
            vars[bs.m + j * bs.q + t] = p.variable_names()[bs.m + t] + suffix;
    }

    std::vector<Polynomial> polys;
    polys.reserve(bs.polynomial_count());
    std::vector<std::size_t> gmap(bs.m);
    for (std::size_t v = 0; v < bs.m; ++v)
        gmap[v] = v;
    for (const auto& gp : g.polynomials()) {
        Polynomial lifted(n);
        gp.remapped(gmap, n, lifted);
        polys.push_back(std::move(lifted));
    }
    for (std::size_t j = 0; j < bs.block_count(); ++j) {
        std::vector<std::size_t> map(p.nvars());
        for (std::size_t v = 0; v < bs.m; ++v)
            map[v] = v;
        for (std::size_t t = 0; t < bs.q; ++t)
            map[bs.m + t] = bs.m + j * bs.q + t;
        for (const auto& pp : p.polynomials()) {
            Polynomial lifted(n);
            pp.remapped(map, n, lifted);
            polys.push_back(std::move(lifted));
        }
    }
    return {PolynomialSystem(std::move(vars), std::move(polys)), bs};
}

} // namespace alphacert
