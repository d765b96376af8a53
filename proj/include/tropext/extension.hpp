#pragma once

// Semifield extensions L/K: an injective order-compatible lattice embedding
// K^x -> L^x, optionally with a finite generating set of L as a K-semimodule.
// The constructors cover the families the library works with: the Frobenius
// extensions F^(n), the scaled-rational family (1/n)Z over Z, subgroup
// inclusions, and the rank-2 lexicographic example.

#include "tropext/errors.hpp"
#include "tropext/matrix.hpp"
#include "tropext/ordered_group.hpp"
#include "tropext/semifield.hpp"
#include "tropext/smith.hpp"
#include "tropext/verdict.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace tropext {

namespace detail {

// Window scan order used by every bounded search: shells of growing max-norm,
// descending lexicographic inside a shell so positive directions come first.
// Deterministic, and the zero vector is the single element of shell 0.
inline std::vector<ExponentVector> window_points(std::size_t rank, const Int& bound) {
    std::vector<ExponentVector> out;
    if (rank == 0) {
        out.push_back(ExponentVector::zeros(0));
        return out;
    }
    for (Int shell(0); shell <= bound; ++shell) {
        std::vector<ExponentVector> layer;
        ExponentVector p = ExponentVector::zeros(rank);
        // enumerate [-shell, shell]^rank, keep max-norm == shell
        for (auto& c : p.coords) c = -shell;
        for (;;) {
            Int maxabs(0);
            for (const auto& c : p.coords)
                if (int_abs(c) > maxabs) maxabs = int_abs(c);
            if (maxabs == shell) layer.push_back(p);
            std::size_t i = rank;
            while (i-- > 0) {
                if (p.coords[i] < shell) {
                    ++p.coords[i];
                    for (std::size_t j = i + 1; j < rank; ++j) p.coords[j] = -shell;
                    break;
                }
                if (i == 0) goto layer_done;
            }
        }
    layer_done:
        std::sort(layer.begin(), layer.end(),
                  [](const ExponentVector& a, const ExponentVector& b) { return b < a; });
        for (auto& q : layer) out.push_back(std::move(q));
    }
    return out;
}

} // namespace detail

// Injective group homomorphism between exponent lattices, order-compatible
// with respect to the two orders. Built-in constructors are order-compatible
// by construction; user-supplied matrices are vetted analytically where an
// exact rule exists (rank <= 1 sources) and by a bounded window search
// otherwise, so the verdict can be Unknown.
class Embedding {
public:
    Embedding(OrderedGroup source, OrderedGroup target, IntMatrix matrix,
              Int order_check_bound = Int(16))
        : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
        if (matrix_.rows() != target_.rank || matrix_.cols() != source_.rank)
            throw DimensionMismatch("embedding matrix shape differs from group ranks");
        if (!is_injective(matrix_))
            throw NonInjectiveEmbedding("embedding matrix has nontrivial kernel");
        order_compat_ = verify_order_compatibility(order_check_bound);
        if (order_compat_.is_no())
            throw OrderIncompatible("embedding does not preserve the order");
    }

    const OrderedGroup& source() const { return source_; }
    const OrderedGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }
    const Verdict& order_compatibility() const { return order_compat_; }

    ExponentVector apply(const ExponentVector& e) const {
        return ExponentVector(matrix_.apply(e.coords));
    }

private:
    Verdict verify_order_compatibility(const Int& bound) const {
        const Semifield target_field{target_};
        if (source_.rank == 0)
            return Verdict::yes({});
        if (source_.rank == 1 && source_.is_total()) {
            // x < y iff 0 < y - x, so positivity of the image of the source
            // generator decides the whole order exactly.
            ExponentVector gen{Int(1)};
            const ExponentVector image = apply(gen);
            const ExponentVector zero = ExponentVector::zeros(target_.rank);
            if (compare(target_, zero, image) == Ordering::less)
                return Verdict::yes({SemifieldElement::unit(image)});
            return Verdict::no({SemifieldElement::unit(image)});
        }
        // Window search over difference vectors d > 0: require A d > 0.
        for (const auto& d : detail::window_points(source_.rank, bound)) {
            if (compare(source_, ExponentVector::zeros(source_.rank), d) != Ordering::less)
                continue;
            const ExponentVector image = apply(d);
            if (compare(target_, ExponentVector::zeros(target_.rank), image) != Ordering::less)
                return Verdict::no({SemifieldElement::unit(d)});
        }
        return Verdict::unknown(bound);
    }

    OrderedGroup source_;
    OrderedGroup target_;
    IntMatrix matrix_;
    Verdict order_compat_ = Verdict::unknown(Int(0));
};

struct Extension {
    Semifield base;   // K
    Semifield top;    // L
    Embedding embed;  // K^x -> L^x on exponent lattices
    // Finite generating set of L as a K-semimodule, when the extension is
    // finite; stored sorted for deterministic output. Never contains zero.
    std::optional<std::vector<SemifieldElement>> generators;
    // For members of the scaled-rational family: the lattice isomorphism onto
    // F^(n) (exponent a of L corresponds to u^a there).
    std::optional<IntMatrix> iso_to_fn;

    Extension(Semifield k, Semifield l, Embedding e,
              std::optional<std::vector<SemifieldElement>> gens = std::nullopt,
              std::optional<IntMatrix> iso = std::nullopt)
        : base(std::move(k)), top(std::move(l)), embed(std::move(e)),
          generators(std::move(gens)), iso_to_fn(std::move(iso)) {
        if (generators) {
            for (const auto& g : *generators)
                if (g.is_zero()) throw ZeroGenerator("generator sets must not contain zero");
            std::sort(generators->begin(), generators->end());
            generators->erase(std::unique(generators->begin(), generators->end()),
                              generators->end());
        }
    }
};

inline SemifieldElement embed_element(const Extension& e, const SemifieldElement& x) {
    if (x.is_zero()) return SemifieldElement::zero();
    return SemifieldElement::unit(e.embed.apply(x.exponent()));
}

// Image of u^m for the canonical generator u of a rank-1 base.
inline SemifieldElement embed_base_power(const Extension& e, const Int& m) {
    if (e.base.rank() != 1) throw BaseNotZmax("base power needs a rank-1 base");
    return embed_element(e, e.base.unit(ExponentVector{m}));
}

// F^(n): Z_max embedded in itself by u^k -> u^{nk}. The top lattice is
// rescaled so that v = Unit(1) and u = Unit(n); generators 1, v, ..., v^{n-1}.
inline Extension make_fn(const Int& n) {
    if (n < 1) throw MathError("make_fn requires n >= 1");
    Semifield k = zmax(), l = zmax();
    IntMatrix m(1, 1);
    m.at(0, 0) = n;
    Embedding e(k.group(), l.group(), m);
    std::vector<SemifieldElement> gens;
    for (Int i(0); i < n; ++i) gens.push_back(l.unit(ExponentVector{i}));
    return Extension(std::move(k), std::move(l), std::move(e), std::move(gens),
                     IntMatrix::identity(1));
}

// (1/n)Z over Z: the top group is rank 1 with rational weight 1/n, the base
// generator lands on lattice exponent n (value n * 1/n = 1). Lattice exponent
// a has value a/n and corresponds to u^a of F^(n).
inline Extension make_scaled(const Int& n) {
    if (n < 1) throw MathError("make_scaled requires n >= 1");
    Semifield k = zmax();
    Semifield l{OrderedGroup(1, OrderSpec::rational_weights({Rat(1, n)}))};
    IntMatrix m(1, 1);
    m.at(0, 0) = n;
    Embedding e(k.group(), l.group(), m);
    std::vector<SemifieldElement> gens;
    for (Int i(0); i < n; ++i) gens.push_back(l.unit(ExponentVector{i}));
    return Extension(std::move(k), std::move(l), std::move(e), std::move(gens),
                     IntMatrix::identity(1));
}

// Z_max inside (Z x Z)_max with the lexicographic order, n identified with
// (0, n). Not a finite extension, so no generator list.
inline Extension make_lex_example() {
    Semifield k = zmax();
    Semifield l{OrderedGroup(2, OrderSpec::lex())};
    IntMatrix m(2, 1);
    m.at(1, 0) = 1;
    Embedding e(k.group(), l.group(), m);
    return Extension(std::move(k), std::move(l), std::move(e));
}

// General N_max inside M_max along an explicit inclusion matrix. The source
// lattice carries the lexicographic order; compatibility of the inclusion
// with the target order is vetted and the verdict kept on the embedding.
inline Extension make_subgroup_extension(const OrderedGroup& target, const IntMatrix& inclusion,
                                         const Int& order_check_bound = Int(16)) {
    Semifield k{OrderedGroup(inclusion.cols(), OrderSpec::lex())};
    Semifield l{target};
    Embedding e(k.group(), l.group(), inclusion, order_check_bound);
    return Extension(std::move(k), std::move(l), std::move(e));
}

inline Extension make_identity_extension() { return make_fn(1); }

} // namespace tropext
