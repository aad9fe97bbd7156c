#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace verlinde {

/// Z/n_1 x ... x Z/n_r with every n_i >= 2. Elements and characters are
/// both indexed in mixed radix over the orders (first component most
/// significant); a character phi pairs with g as exp(2 pi i sum phi_i g_i / n_i).
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<std::int64_t> cyclic_orders);

    const std::vector<std::int64_t>& cyclic_orders() const noexcept { return orders_; }
    std::size_t order() const noexcept { return order_; }
    /// lcm of the cyclic orders; pairings are measured in 1/exponent() turns.
    std::int64_t exponent() const noexcept { return exponent_; }

    std::vector<std::int64_t> coords(std::size_t index) const;
    std::size_t index(const std::vector<std::int64_t>& coords) const;

    std::size_t identity() const noexcept { return 0; }
    std::size_t add(std::size_t g, std::size_t h) const;
    /// <phi, g> in units of 1/exponent() turns, in 0..exponent()-1.
    std::int64_t pairing(std::size_t phi, std::size_t g) const;

private:
    std::vector<std::int64_t> orders_;
    std::size_t order_ = 1;
    std::int64_t exponent_ = 1;
};

/// Invariant-factor lists n_1 | n_2 | ... with product <= max_order: one
/// representative of every finite abelian group of order 2..max_order.
std::vector<std::vector<std::int64_t>> abelian_groups_up_to(std::int64_t max_order);

/// Grothendieck ring of G-equivariant vector bundles over G (conjugation
/// action, trivial for abelian G), product pushed forward along
/// multiplication. Basis: a point g carrying a one-dimensional fiber on
/// which G acts by the character phi. Every basis product is a single basis
/// element, so structure constants are stored as a product table.
class KGGRing {
public:
    struct BasisElement {
        std::size_t support;
        std::size_t character;
        friend bool operator==(const BasisElement&, const BasisElement&) = default;
    };

    KGGRing(FiniteAbelianGroup group, std::vector<std::size_t> product_table);

    const FiniteAbelianGroup& group() const noexcept { return group_; }
    std::size_t rank() const noexcept { return group_.order() * group_.order(); }
    BasisElement basis(std::size_t i) const;
    std::size_t basis_index(BasisElement e) const;
    std::size_t unit() const noexcept { return basis_index({group_.identity(), 0}); }

    /// Index of e_i * e_j.
    std::size_t product(std::size_t i, std::size_t j) const { return table_.at(i * rank() + j); }
    /// Structure constant N_{ij}^l, always 0 or 1.
    int coeff(std::size_t i, std::size_t j, std::size_t l) const { return product(i, j) == l ? 1 : 0; }

    bool is_commutative() const;
    bool is_associative() const;
    bool is_unital() const;

private:
    FiniteAbelianGroup group_;
    std::vector<std::size_t> table_;
};

KGGRing kgg_ring(const FiniteAbelianGroup& group);

/// {"orders": [...], "rank": r, "basis": [[g, phi], ...], "N": r x r table of product indices}
nlohmann::json to_json(const KGGRing& ring);
std::string to_text(const KGGRing& ring);

}  // namespace verlinde
