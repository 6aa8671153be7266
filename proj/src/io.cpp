#include "bmoll/io.hpp"

#include <sstream>

#include "bmoll/boros_moll.hpp"

namespace bmoll {

using nlohmann::json;

namespace {

json int_row_json(const std::vector<Int>& row) {
    json arr = json::array();
    for (const Int& v : row) arr.push_back(v.get_str());
    return arr;
}

json signed_row_json(const std::vector<Int>& row) {
    json arr = json::array();
    for (std::size_t k = 0; k < row.size(); ++k) {
        arr.push_back(Int(k % 2 == 0 ? row[k] : -row[k]).get_str());
    }
    return arr;
}

} // namespace

json poly_coeffs_json(const Poly& f) {
    json arr = json::array();
    for (const std::string& s : coeff_strings(f)) arr.push_back(s);
    return arr;
}

json compute_json(char kind, unsigned long m, const Poly& f) {
    return json{{"kind", std::string(1, kind)},
                {"m", m},
                {"degree", f.degree()},
                {"coeffs", poly_coeffs_json(f)}};
}

std::string poly_csv(const Poly& f) {
    std::ostringstream out;
    out << "i,coefficient\n";
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        out << i << "," << f.coeffs()[i].str() << "\n";
    }
    return out.str();
}

json decomp_json(unsigned long m, const SymDecomp& d) {
    return json{{"m", m},
                {"n", d.n},
                {"a", poly_coeffs_json(d.a)},
                {"b", poly_coeffs_json(d.b)}};
}

json gamma_rows_json(unsigned long m, const std::vector<Int>& alpha, const std::vector<Int>& beta) {
    return json{{"m", m},
                {"alpha", int_row_json(alpha)},
                {"beta", int_row_json(beta)},
                {"alpha_signed", signed_row_json(alpha)},
                {"beta_signed", signed_row_json(beta)}};
}

json triangle_json(const AlphaBetaTriangle& tri) {
    json rows = json::array();
    for (std::size_t m = 0; m < tri.alpha.size(); ++m) {
        rows.push_back(json{{"m", m},
                            {"alpha", int_row_json(tri.alpha[m])},
                            {"beta", int_row_json(tri.beta[m])}});
    }
    return json{{"max_m", tri.max_m()}, {"rows", rows}};
}

namespace {

void triangle_csv_rows(std::size_t m, const std::vector<Int>& alpha, const std::vector<Int>& beta,
                       std::ostream& out) {
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        out << m << "," << k << "," << alpha[k].get_str() << ",";
        if (k < beta.size()) out << beta[k].get_str();
        out << "\n";
    }
}

} // namespace

std::string triangle_csv(const AlphaBetaTriangle& tri) {
    std::ostringstream out;
    out << "m,k,alpha,beta\n";
    for (std::size_t m = 0; m < tri.alpha.size(); ++m) {
        triangle_csv_rows(m, tri.alpha[m], tri.beta[m], out);
    }
    return out.str();
}

void triangle_csv_stream(unsigned long max_m, std::ostream& out) {
    out << "m,k,alpha,beta\n";
    for_each_triangle_row(max_m, [&](unsigned long m, const std::vector<Int>& a,
                                     const std::vector<Int>& b) { triangle_csv_rows(m, a, b, out); });
}

json record_json(const ClassificationRecord& rec) {
    json flags = json::array();
    for (const std::string& f : rec.flags) flags.push_back(f);
    return json{{"m", rec.m},
                {"alpha", rec.alpha.str_frac()},
                {"beta", rec.beta.str_frac()},
                {"transform", to_string(rec.transform)},
                {"a_class", rec.a_class ? json(to_string(*rec.a_class)) : json(nullptr)},
                {"b_class", rec.b_class ? json(to_string(*rec.b_class)) : json(nullptr)},
                {"degenerate", rec.degenerate},
                {"flags", flags}};
}

std::string record_csv_header() { return "m,alpha,beta,transform,a_class,b_class,degenerate,flags\n"; }

std::string record_csv_row(const ClassificationRecord& rec) {
    std::ostringstream out;
    out << rec.m << "," << rec.alpha.str_frac() << "," << rec.beta.str_frac() << ","
        << to_string(rec.transform) << "," << (rec.a_class ? to_string(*rec.a_class) : "") << ","
        << (rec.b_class ? to_string(*rec.b_class) : "") << "," << (rec.degenerate ? "1" : "0") << ",";
    for (std::size_t i = 0; i < rec.flags.size(); ++i) {
        if (i) out << ";";
        out << rec.flags[i];
    }
    out << "\n";
    return out.str();
}

json report_json(const Report& report) {
    json checks = json::array();
    for (const CheckResult& c : report.checks) {
        checks.push_back(json{{"name", c.name},
                              {"range", c.range},
                              {"pass", c.pass},
                              {"advisory", c.advisory},
                              {"counterexample", c.counterexample}});
    }
    return json{{"all_pass", report.all_pass()}, {"checks", checks}};
}

namespace {

struct FactoredDecomp {
    long a_scale;
    std::vector<Rat> a_core;
    long b_scale;
    bool b_has_one_plus_x;
    std::vector<Rat> b_core;
};

const FactoredDecomp* factored_decomp(unsigned long m) {
    auto core = [](std::initializer_list<long> cs) {
        std::vector<Rat> out;
        for (long c : cs) out.emplace_back(c);
        return out;
    };
    static const std::vector<FactoredDecomp> table = {
        {2, core({1, 1}), 1, false, core({1})},
        {3, core({4, 7, 4}), 9, false, core({1, 1})},
        {3, core({40, 103, 103, 40}), 3, false, core({37, 69, 37})},
        {105, core({16, 55, 79, 55, 16}), 255, true, core({7, 12, 7})},
        {315, core({96, 415, 781, 781, 415, 96}), 315, false, core({113, 403, 583, 403, 113})},
    };
    if (m < 1 || m > table.size()) return nullptr;
    return &table[m - 1];
}

} // namespace

std::string factored_decomp_display(unsigned long m) {
    const FactoredDecomp* fd = factored_decomp(m);
    if (!fd) return {};
    std::ostringstream out;
    out << "Q_" << m << "(x) = " << fd->a_scale << "*(" << to_string(Poly(fd->a_core)) << ") + "
        << fd->b_scale << "*x*";
    if (fd->b_has_one_plus_x) out << "(1 + x)*";
    out << "(" << to_string(Poly(fd->b_core)) << ")";
    return out.str();
}

bool factored_display_consistent(unsigned long m) {
    const FactoredDecomp* fd = factored_decomp(m);
    if (!fd) return false;
    Poly a = Rat(fd->a_scale) * Poly(fd->a_core);
    Poly b = Rat(fd->b_scale) * Poly(fd->b_core);
    if (fd->b_has_one_plus_x) b = b * Poly(std::vector<Rat>{Rat(1), Rat(1)});
    const SymDecomp d = decompose(q_poly(m), m);
    return a == d.a && b == d.b;
}

} // namespace bmoll
