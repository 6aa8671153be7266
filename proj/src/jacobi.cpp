#include "bmoll/jacobi.hpp"

#include "bmoll/boros_moll.hpp"
#include "bmoll/error.hpp"
#include "bmoll/kernels.hpp"
#include "bmoll/symdecomp.hpp"

namespace bmoll {

Poly jacobi_poly(unsigned long m, const Rat& alpha, const Rat& beta) {
    const long lm = static_cast<long>(m);
    Poly acc;
    Poly pow = Poly::one(); // (1+x)^k
    const Poly one_x(std::vector<Rat>{Rat(1), Rat(1)});
    Rat half_pow(1);        // 2^{-k}
    const Rat half(1, 2);
    for (unsigned long k = 0; k <= m; ++k) {
        Rat c = gen_binomial(beta + Rat(lm), m - k) *
                gen_binomial(alpha + beta + Rat(lm + static_cast<long>(k)), k) * half_pow;
        if ((m - k) % 2 == 1) c = -c;
        if (!c.is_zero()) acc = acc + c * pow;
        pow = pow * one_x;
        half_pow *= half;
    }
    return acc;
}

bool specialization_check(unsigned long m) {
    const Rat a = Rat(static_cast<long>(m)) + Rat(1, 2);
    return jacobi_poly(m, a, -a) == p_poly(m);
}

std::string to_string(Transform t) { return t == Transform::Raw ? "raw" : "reversed"; }

void GridSpec::validate() const {
    if (alpha_count < 1 || beta_count < 1) {
        throw invalid_grid("grid counts must be >= 1");
    }
    if (alpha_count > 1 && alpha_step.is_zero()) {
        throw invalid_grid("alpha step must be nonzero when alpha count > 1");
    }
    if (beta_count > 1 && beta_step.is_zero()) {
        throw invalid_grid("beta step must be nonzero when beta count > 1");
    }
    if (m_min > m_max) {
        throw invalid_grid("empty m range: m_min > m_max");
    }
}

ClassificationRecord classify_point(unsigned long m, const Rat& alpha, const Rat& beta,
                                    Transform transform) {
    ClassificationRecord rec;
    rec.m = m;
    rec.alpha = alpha;
    rec.beta = beta;
    rec.transform = transform;
    try {
        Poly f = jacobi_poly(m, alpha, beta);
        if (transform == Transform::Reversed) f = reverse(f, m);
        if (f.is_zero()) {
            rec.degenerate = true;
            rec.flags.push_back("zero polynomial");
            return rec;
        }
        const SymDecomp d = decompose(f, m);
        rec.a_class = classify(gamma_vector(d.a, m));
        if (m >= 1) rec.b_class = classify(gamma_vector(d.b, m - 1));
    } catch (const error& e) {
        rec.degenerate = true;
        rec.a_class.reset();
        rec.b_class.reset();
        rec.flags.push_back(e.what());
    }
    return rec;
}

void scan(const GridSpec& spec, Transform transform,
          const std::function<void(const ClassificationRecord&)>& sink) {
    spec.validate();
    for (unsigned long m = spec.m_min; m <= spec.m_max; ++m) {
        Rat alpha = spec.alpha_start;
        for (unsigned long i = 0; i < spec.alpha_count; ++i) {
            Rat beta = spec.beta_start;
            for (unsigned long j = 0; j < spec.beta_count; ++j) {
                sink(classify_point(m, alpha, beta, transform));
                beta += spec.beta_step;
            }
            alpha += spec.alpha_step;
        }
    }
}

std::vector<ClassificationRecord> scan(const GridSpec& spec, Transform transform) {
    std::vector<ClassificationRecord> out;
    scan(spec, transform, [&](const ClassificationRecord& r) { out.push_back(r); });
    return out;
}

} // namespace bmoll
