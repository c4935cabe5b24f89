#pragma once

#include <map>
#include <vector>

#include "cwlab/boson.hpp"
#include "cwlab/matrix.hpp"

namespace cwlab::testing {

/// Independent truncated-Fock oracle for the symbolic boson algebra. States
/// are occupation tuples with every entry <= cap, represented in the
/// polynomial (Bargmann) picture where C+_i acts as multiplication by z_i and
/// C_i as d/dz_i, so every matrix entry is an exact integer:
///   C+_i |n> = |n + e_i>,   C_i |n> = n_i |n - e_i>.
/// The commutation relation [C_i, C_j+] = delta_ij holds verbatim, and basis
/// rescaling does not affect the operator-product identities checked here.
class FockOracle {
public:
    FockOracle(std::size_t modes, std::uint32_t cap) : modes_(modes), cap_(cap) {
        std::vector<std::uint32_t> state(modes, 0);
        enumerate(state, 0);
        for (std::size_t k = 0; k < states_.size(); ++k) index_[states_[k]] = k;
    }

    std::size_t dimension() const { return states_.size(); }
    const std::vector<std::uint32_t>& state(std::size_t k) const { return states_[k]; }

    /// Matrix of a normal-ordered polynomial on the truncated basis. Raising
    /// past the cap truncates (drops the amplitude).
    Mat matrix_of(const BosonPoly& p) const {
        Mat out(states_.size());
        for (const auto& [mono, coeff] : p.terms()) {
            for (std::size_t col = 0; col < states_.size(); ++col) {
                std::vector<std::uint32_t> state = states_[col];
                // Annihilators first (normal order acts right-to-left).
                mpz_class amplitude = 1;
                bool killed = false;
                for (std::size_t m = 0; m < modes_ && !killed; ++m) {
                    for (std::uint32_t k = 0; k < mono.ann[m]; ++k) {
                        if (state[m] == 0) { killed = true; break; }
                        amplitude *= state[m];
                        --state[m];
                    }
                }
                if (killed) continue;
                bool overflow = false;
                for (std::size_t m = 0; m < modes_ && !overflow; ++m) {
                    state[m] += mono.cre[m];
                    if (state[m] > cap_) overflow = true;
                }
                if (overflow) continue;  // truncated away
                std::size_t row = index_.at(state);
                out.at(row, col) += coeff * Scalar::from_rational(Rational(amplitude));
            }
        }
        return out;
    }

    /// Columns (input states) on which matrix_of(normal_product(p, q)) must
    /// equal matrix_of(p) * matrix_of(q): no intermediate state can cross the
    /// cap, i.e. n_m + maxraise_m(q) + maxraise_m(p) <= cap for every mode.
    std::vector<std::size_t> safe_columns(const BosonPoly& p, const BosonPoly& q) const {
        std::vector<std::uint32_t> raise(modes_, 0);
        auto absorb = [&raise, this](const BosonPoly& poly) {
            std::vector<std::uint32_t> local(modes_, 0);
            for (const auto& [mono, coeff] : poly.terms())
                for (std::size_t m = 0; m < modes_; ++m)
                    local[m] = std::max(local[m], mono.cre[m]);
            for (std::size_t m = 0; m < modes_; ++m) raise[m] += local[m];
        };
        absorb(q);
        absorb(p);
        std::vector<std::size_t> cols;
        for (std::size_t k = 0; k < states_.size(); ++k) {
            bool safe = true;
            for (std::size_t m = 0; m < modes_; ++m)
                if (states_[k][m] + raise[m] > cap_) { safe = false; break; }
            if (safe) cols.push_back(k);
        }
        return cols;
    }

private:
    void enumerate(std::vector<std::uint32_t>& state, std::size_t mode) {
        if (mode == modes_) {
            states_.push_back(state);
            return;
        }
        for (std::uint32_t v = 0; v <= cap_; ++v) {
            state[mode] = v;
            enumerate(state, mode + 1);
        }
        state[mode] = 0;
    }

    std::size_t modes_;
    std::uint32_t cap_;
    std::vector<std::vector<std::uint32_t>> states_;
    std::map<std::vector<std::uint32_t>, std::size_t> index_;
};

}  // namespace cwlab::testing
