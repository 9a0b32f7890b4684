// Copyright 2026 The cliffnf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Internal: a fixed-size tableau for at most three qubits, packed into a
// single 64-bit key. Used by the breadth-first searches over small Clifford
// groups (gate realizations and rewrite right-hand sides).

#ifndef CLIFFNF_PACKED_TABLEAU_H
#define CLIFFNF_PACKED_TABLEAU_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cliffnf/circuit.h"
#include "cliffnf/tableau.h"

namespace cliffnf::detail {

constexpr std::size_t kPackedMaxQubits = 3;

struct PackedImage {
    std::uint8_t x = 0;
    std::uint8_t z = 0;
    bool minus = false;
};

class PackedTableau {
   public:
    PackedTableau() = default;
    explicit PackedTableau(std::size_t n) : n_(n) {
        if (n > kPackedMaxQubits) {
            throw std::invalid_argument("packed tableau supports at most 3 qubits");
        }
        for (std::size_t q = 0; q < n; q++) {
            img_[q].x = static_cast<std::uint8_t>(1u << q);
            img_[n + q].z = static_cast<std::uint8_t>(1u << q);
        }
    }

    static PackedTableau from(const CliffordTableau &t) {
        PackedTableau out(t.num_qubits());
        for (std::size_t q = 0; q < out.n_; q++) {
            out.img_[q] = pack(t.x_image(q));
            out.img_[out.n_ + q] = pack(t.z_image(q));
        }
        return out;
    }

    CliffordTableau unpack() const {
        CliffordTableau t(n_);
        for (std::size_t q = 0; q < n_; q++) {
            t.x_image(q) = unpack_image(img_[q]);
            t.z_image(q) = unpack_image(img_[n_ + q]);
        }
        return t;
    }

    std::size_t num_qubits() const {
        return n_;
    }
    /// Images of X_0..X_{n-1} followed by Z_0..Z_{n-1}.
    const PackedImage &image(std::size_t i) const {
        return img_[i];
    }

    void apply(const Gate &g) {
        for (std::size_t i = 0; i < 2 * n_; i++) {
            conjugate(img_[i], g);
        }
    }

    static PackedTableau from_key(std::size_t n, std::uint64_t key) {
        PackedTableau out(n);
        for (std::size_t i = 2 * n; i-- > 0;) {
            out.img_[i].minus = key & 1;
            out.img_[i].z = static_cast<std::uint8_t>((key >> 1) & 7);
            out.img_[i].x = static_cast<std::uint8_t>((key >> 4) & 7);
            key >>= 7;
        }
        return out;
    }

    std::uint64_t key() const {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < 2 * n_; i++) {
            k = (k << 7) | (std::uint64_t{img_[i].x} << 4) | (std::uint64_t{img_[i].z} << 1) | img_[i].minus;
        }
        return k;
    }

    bool operator==(const PackedTableau &o) const {
        return n_ == o.n_ && key() == o.key();
    }

    static void conjugate(PackedImage &p, const Gate &g) {
        auto bit = [](std::uint8_t v, std::uint32_t q) { return static_cast<bool>((v >> q) & 1); };
        auto put = [](std::uint8_t &v, std::uint32_t q, bool b) {
            v = static_cast<std::uint8_t>((v & ~(1u << q)) | (unsigned{b} << q));
        };
        switch (g.kind) {
            case GateKind::Omega:
                return;
            case GateKind::H: {
                bool x = bit(p.x, g.q0), z = bit(p.z, g.q0);
                p.minus ^= x && z;
                put(p.x, g.q0, z);
                put(p.z, g.q0, x);
                return;
            }
            case GateKind::S: {
                bool x = bit(p.x, g.q0), z = bit(p.z, g.q0);
                p.minus ^= x && z;
                put(p.z, g.q0, x != z);
                return;
            }
            case GateKind::X:
                p.minus ^= bit(p.z, g.q0);
                return;
            case GateKind::CZ: {
                bool xa = bit(p.x, g.q0), za = bit(p.z, g.q0), xb = bit(p.x, g.q1), zb = bit(p.z, g.q1);
                p.minus ^= xa && xb && (za != zb);
                put(p.z, g.q0, za != xb);
                put(p.z, g.q1, zb != xa);
                return;
            }
            default:
                throw std::invalid_argument("packed tableau only accepts generator gates");
        }
    }

   private:
    static PackedImage pack(const PauliOperator &p) {
        PackedImage out;
        for (std::size_t q = 0; q < p.num_qubits(); q++) {
            out.x |= static_cast<std::uint8_t>(p.x(q) << q);
            out.z |= static_cast<std::uint8_t>(p.z(q) << q);
        }
        out.minus = p.phase_exp() == 2;
        return out;
    }
    PauliOperator unpack_image(const PackedImage &im) const {
        PauliOperator p(n_);
        for (std::size_t q = 0; q < n_; q++) {
            p.set(q, (im.x >> q) & 1, (im.z >> q) & 1);
        }
        p.set_phase_exp(im.minus ? 2 : 0);
        return p;
    }

    std::size_t n_ = 0;
    std::array<PackedImage, 2 * kPackedMaxQubits> img_{};
};

/// Layered breadth-first search over the group generated by `gens`, grown on
/// demand. Elements are discovered in shortlex order of their words (in the
/// order the generators are listed), so `find` returns the shortlex-least word.
class WordSearch {
   public:
    WordSearch(std::size_t n, std::vector<Gate> gens, std::size_t max_depth)
        : n_(n), gens_(std::move(gens)), max_depth_(max_depth) {
        keys_.push_back(PackedTableau(n).key());
        parent_.push_back(0);
        via_.push_back(0);
        index_.emplace(keys_[0], 0);
        layer_end_.push_back(1);
    }

    /// Shortest word whose tableau is `target`, or nullopt if none exists
    /// within `max_depth` gates.
    std::optional<Circuit> find(const PackedTableau &target) {
        std::uint64_t k = target.key();
        while (true) {
            auto it = index_.find(k);
            if (it != index_.end()) {
                return word(it->second);
            }
            if (!grow()) {
                return std::nullopt;
            }
        }
    }

    std::size_t size() const {
        return keys_.size();
    }
    std::size_t depth() const {
        return layer_end_.size() - 1;
    }

   private:
    bool grow() {
        if (depth() >= max_depth_ || exhausted_) {
            return false;
        }
        std::size_t begin = layer_end_.size() >= 2 ? layer_end_[layer_end_.size() - 2] : 0;
        std::size_t end = layer_end_.back();
        for (std::size_t i = begin; i < end; i++) {
            PackedTableau base = PackedTableau::from_key(n_, keys_[i]);
            for (std::size_t g = 0; g < gens_.size(); g++) {
                PackedTableau next = base;
                next.apply(gens_[g]);
                std::uint64_t key = next.key();
                if (index_.emplace(key, static_cast<std::uint32_t>(keys_.size())).second) {
                    keys_.push_back(key);
                    parent_.push_back(static_cast<std::uint32_t>(i));
                    via_.push_back(static_cast<std::uint8_t>(g));
                }
            }
        }
        if (keys_.size() == end) {
            exhausted_ = true;
            return false;
        }
        layer_end_.push_back(keys_.size());
        return true;
    }

    Circuit word(std::size_t idx) const {
        std::vector<Gate> rev;
        while (idx != 0) {
            rev.push_back(gens_[via_[idx]]);
            idx = parent_[idx];
        }
        return Circuit(n_, std::vector<Gate>(rev.rbegin(), rev.rend()));
    }

    std::size_t n_;
    std::vector<Gate> gens_;
    std::size_t max_depth_;
    bool exhausted_ = false;
    std::vector<std::uint64_t> keys_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> via_;
    std::vector<std::size_t> layer_end_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

}  // namespace cliffnf::detail

#endif
