#include "verlinde/finite_sector.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace verlinde {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> cyclic_orders) : orders_(std::move(cyclic_orders)) {
    if (orders_.empty()) throw std::invalid_argument("finite abelian group needs at least one cyclic factor");
    for (auto n : orders_) {
        if (n < 2) throw std::invalid_argument("cyclic order must be >= 2, got " + std::to_string(n));
        if (order_ > (std::size_t{1} << 20) / static_cast<std::size_t>(n))
            throw std::invalid_argument("finite abelian group too large");
        order_ *= static_cast<std::size_t>(n);
        exponent_ = std::lcm(exponent_, n);
    }
}

std::vector<std::int64_t> FiniteAbelianGroup::coords(std::size_t index) const {
    if (index >= order_) throw std::out_of_range("group element index out of range");
    std::vector<std::int64_t> out(orders_.size());
    for (std::size_t i = orders_.size(); i-- > 0;) {
        const auto n = static_cast<std::size_t>(orders_[i]);
        out[i] = static_cast<std::int64_t>(index % n);
        index /= n;
    }
    return out;
}

std::size_t FiniteAbelianGroup::index(const std::vector<std::int64_t>& coords) const {
    if (coords.size() != orders_.size()) throw std::invalid_argument("coordinate vector has wrong length");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const auto n = orders_[i];
        idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(((coords[i] % n) + n) % n);
    }
    return idx;
}

std::size_t FiniteAbelianGroup::add(std::size_t g, std::size_t h) const {
    auto a = coords(g);
    const auto b = coords(h);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return index(a);
}

std::int64_t FiniteAbelianGroup::pairing(std::size_t phi, std::size_t g) const {
    const auto p = coords(phi);
    const auto x = coords(g);
    std::int64_t turns = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i)
        turns = (turns + p[i] * x[i] % orders_[i] * (exponent_ / orders_[i])) % exponent_;
    return turns;
}

std::vector<std::vector<std::int64_t>> abelian_groups_up_to(std::int64_t max_order) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> factors;
    // Build n_1 | n_2 | ... | n_r by choosing each next factor as a multiple of the last.
    std::function<void(std::int64_t, std::int64_t)> extend = [&](std::int64_t last, std::int64_t product) {
        if (!factors.empty()) out.push_back(factors);
        for (std::int64_t next = last; product * next <= max_order; next += last) {
            if (next < 2) continue;
            factors.push_back(next);
            extend(next, product * next);
            factors.pop_back();
        }
    };
    extend(1, 1);
    return out;
}

KGGRing::KGGRing(FiniteAbelianGroup group, std::vector<std::size_t> product_table)
    : group_(std::move(group)), table_(std::move(product_table)) {
    if (table_.size() != rank() * rank()) throw std::invalid_argument("product table has wrong size");
}

KGGRing::BasisElement KGGRing::basis(std::size_t i) const {
    if (i >= rank()) throw std::out_of_range("basis index out of range");
    return {i / group_.order(), i % group_.order()};
}

std::size_t KGGRing::basis_index(BasisElement e) const { return e.support * group_.order() + e.character; }

bool KGGRing::is_commutative() const {
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = i + 1; j < rank(); ++j)
            if (product(i, j) != product(j, i)) return false;
    return true;
}

bool KGGRing::is_associative() const {
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) {
            const auto ij = product(i, j);
            for (std::size_t l = 0; l < rank(); ++l)
                if (product(ij, l) != product(i, product(j, l))) return false;
        }
    return true;
}

bool KGGRing::is_unital() const {
    const auto u = unit();
    for (std::size_t i = 0; i < rank(); ++i)
        if (product(u, i) != i || product(i, u) != i) return false;
    return true;
}

KGGRing kgg_ring(const FiniteAbelianGroup& group) {
    const auto order = group.order();
    const auto exponent = group.exponent();

    // A one-dimensional representation is known by its values; the tensor
    // product of fibers multiplies values, i.e. adds pairings.
    std::vector<std::vector<std::int64_t>> values(order, std::vector<std::int64_t>(order));
    std::map<std::vector<std::int64_t>, std::size_t> by_values;
    for (std::size_t phi = 0; phi < order; ++phi) {
        for (std::size_t g = 0; g < order; ++g) values[phi][g] = group.pairing(phi, g);
        if (!by_values.emplace(values[phi], phi).second)
            throw std::logic_error("two characters of the group have the same values");
    }

    std::vector<std::size_t> support_sum(order * order);
    for (std::size_t g = 0; g < order; ++g)
        for (std::size_t h = 0; h < order; ++h) support_sum[g * order + h] = group.add(g, h);

    std::vector<std::size_t> tensor_of(order * order);
    std::vector<std::int64_t> fiber(order);
    for (std::size_t p = 0; p < order; ++p)
        for (std::size_t q = 0; q < order; ++q) {
            for (std::size_t g = 0; g < order; ++g) fiber[g] = (values[p][g] + values[q][g]) % exponent;
            tensor_of[p * order + q] = by_values.at(fiber);
        }

    // Pushforward along multiplication: the external product of E_(g,p) and
    // E_(h,q) lives over (g, h) and lands over gh with fiber p (x) q.
    const auto rank = order * order;
    std::vector<std::size_t> table(rank * rank);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) {
            const auto g = i / order, p = i % order;
            const auto h = j / order, q = j % order;
            table[i * rank + j] = support_sum[g * order + h] * order + tensor_of[p * order + q];
        }
    return KGGRing(group, std::move(table));
}

nlohmann::json to_json(const KGGRing& ring) {
    nlohmann::json j;
    j["orders"] = ring.group().cyclic_orders();
    j["rank"] = ring.rank();
    auto basis = nlohmann::json::array();
    for (std::size_t i = 0; i < ring.rank(); ++i) {
        const auto e = ring.basis(i);
        basis.push_back({ring.group().coords(e.support), ring.group().coords(e.character)});
    }
    j["basis"] = std::move(basis);
    auto table = nlohmann::json::array();
    for (std::size_t i = 0; i < ring.rank(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t l = 0; l < ring.rank(); ++l) row.push_back(ring.product(i, l));
        table.push_back(std::move(row));
    }
    j["N"] = std::move(table);
    return j;
}

namespace {

std::string tuple_text(const std::vector<std::int64_t>& v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ')';
    return out.str();
}

}  // namespace

std::string to_text(const KGGRing& ring) {
    std::ostringstream out;
    const auto& g = ring.group();
    out << "G = ";
    for (std::size_t i = 0; i < g.cyclic_orders().size(); ++i) out << (i ? " x " : "") << "Z/" << g.cyclic_orders()[i];
    out << ", |G| = " << g.order() << "\n";
    out << "K_G(G) free of rank " << ring.rank() << "; basis e[g;phi], e[g;phi]·e[h;psi] = e[g+h;phi+psi]\n";
    out << "unit e" << "[" << tuple_text(g.coords(0)) << ";" << tuple_text(g.coords(0)) << "]\n";
    out << "commutative " << (ring.is_commutative() ? "yes" : "no") << ", unital "
        << (ring.is_unital() ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace verlinde
