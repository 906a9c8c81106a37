#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chromsym/numeric.hpp"
#include "chromsym/partition.hpp"

namespace chromsym {

enum class BasisName { e, h, m, p, s };

char basis_letter(BasisName b);
BasisName basis_from_letter(char c);  // throws std::domain_error

/// An element of the ring of symmetric functions, stored as its power-sum
/// expansion with exact rational coefficients. May mix degrees; the key
/// partition's size is its degree, constants sit at the empty partition.
/// Zero coefficients are never stored. Immutable in spirit: every operation
/// returns a fresh value.
class SymFunc {
public:
    SymFunc() = default;

    static SymFunc zero() { return SymFunc(); }
    static SymFunc constant(const Rational& c);
    /// c * p_lambda.
    static SymFunc p_term(const Partition& lambda, const Rational& c = 1);

    const std::map<Partition, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Partition& lambda) const;

    SymFunc& add_term(const Partition& lambda, const Rational& c);

    friend SymFunc operator+(const SymFunc& a, const SymFunc& b);
    friend SymFunc operator-(const SymFunc& a, const SymFunc& b);
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
    friend SymFunc operator*(const Rational& c, const SymFunc& f);
    friend bool operator==(const SymFunc&, const SymFunc&) = default;

private:
    std::map<Partition, Rational> terms_;
};

/// The basis element b_lambda as a SymFunc (internal p-expansion).
SymFunc from_basis(BasisName b, const Partition& lambda);

/// Coefficients of f in basis b, exact; empty map for zero.
std::map<Partition, Rational> to_basis(const SymFunc& f, BasisName b);

/// Skew Schur function via the Littlewood-Richardson expansion.
SymFunc skew_schur(const SkewDiagram& d);

SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// omega(p_lambda) = (-1)^(|lambda| - length(lambda)) p_lambda, extended
/// linearly; satisfies omega(s_D) = s_{D^t}.
SymFunc omega(const SymFunc& f);

/// Hall scalar product: <p_lambda, p_mu> = delta z_lambda, bilinear.
Rational scalar_product(const SymFunc& f, const SymFunc& g);

enum class PSign { zero, positive, negative, mixed };

struct PSignature {
    PSign sign = PSign::zero;
    std::optional<Partition> positive_witness;
    std::optional<Partition> negative_witness;
};

/// Sign pattern of the p-coefficients, with one witness per occurring sign.
PSignature p_signature(const SymFunc& f);

/// Image of f in k variables: exponent vector (length k) -> coefficient.
/// Computed through the monomial expansion.
std::map<std::vector<int>, Rational> expand_in_variables(const SymFunc& f, int k);

/// {"basis":"p","terms":[{"partition":[2,1],"coeff":"1/2"},...]} in
/// canonical term order.
nlohmann::json symfunc_to_json(const SymFunc& f, BasisName b);
SymFunc symfunc_from_json(const nlohmann::json& j);

namespace detail {
/// p_lambda expanded in the monomial basis, for lambda of the given degree.
/// Triangular with nonzero diagonal in the canonical partition order.
const std::map<Partition, std::map<Partition, Rational>>& p_to_m_table(int degree);
const std::map<Partition, SymFunc>& m_in_p_table(int degree);
const std::map<Partition, SymFunc>& s_in_p_table(int degree);
}  // namespace detail

}  // namespace chromsym
