#ifndef BMOLL_JACOBI_HPP
#define BMOLL_JACOBI_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bmoll/gamma.hpp"
#include "bmoll/poly.hpp"

namespace bmoll {

/// Jacobi polynomial with exact rational parameters,
///   P_m^{(alpha,beta)}(x) = sum_{k=0}^m (-1)^{m-k} C(m+beta, m-k)
///                           C(m+k+alpha+beta, k) ((1+x)/2)^k,
/// expanded exactly over Rat.
Poly jacobi_poly(unsigned long m, const Rat& alpha, const Rat& beta);

/// P_m^{(m+1/2, -(m+1/2))} == P_m exactly.
bool specialization_check(unsigned long m);

enum class Transform { Raw, Reversed };

std::string to_string(Transform t);

/// Lattice of scan points: alpha and beta arithmetic progressions crossed
/// with an m range. validate() enforces counts >= 1, nonzero steps when
/// count > 1, and m_min <= m_max.
struct GridSpec {
    Rat alpha_start, alpha_step;
    unsigned long alpha_count = 1;
    Rat beta_start, beta_step;
    unsigned long beta_count = 1;
    unsigned long m_min = 0, m_max = 0;

    void validate() const;
};

/// Outcome at one lattice point. Degeneracy (zero polynomial, any internal
/// decomposition failure) is recorded as data, never thrown; classifications
/// are absent when degenerate, and b_class is absent at m = 0 where the b
/// component has no center.
struct ClassificationRecord {
    unsigned long m = 0;
    Rat alpha, beta;
    Transform transform = Transform::Raw;
    std::optional<GammaClass> a_class, b_class;
    bool degenerate = false;
    std::vector<std::string> flags;
};

ClassificationRecord classify_point(unsigned long m, const Rat& alpha, const Rat& beta,
                                    Transform transform);

/// One record per (m, alpha, beta) point in row-major order: m outer,
/// alpha middle, beta inner. Deterministic byte-for-byte across runs.
void scan(const GridSpec& spec, Transform transform,
          const std::function<void(const ClassificationRecord&)>& sink);
std::vector<ClassificationRecord> scan(const GridSpec& spec, Transform transform);

} // namespace bmoll

#endif
