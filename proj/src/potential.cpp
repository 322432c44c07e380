#include "zs/potential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "zs/errors.hpp"

namespace zs {

namespace {

constexpr double kSymmetryTol = 1e-14;

bool coeff_conj_related(const Potential::CoeffMap& p1,
                        const Potential::CoeffMap& p2, double sign) {
    // p2_k == sign * conj(p1_{-k}) to relative tolerance.
    double scale = 0.0;
    for (const auto& [k, c] : p1) scale = std::max(scale, std::abs(c));
    for (const auto& [k, c] : p2) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) return true;
    auto value = [](const Potential::CoeffMap& m, int k) {
        auto it = m.find(k);
        return it == m.end() ? cplx{} : it->second;
    };
    for (const auto& [k, c] : p1) {
        if (std::abs(value(p2, -k) - sign * std::conj(c)) > kSymmetryTol * scale)
            return false;
    }
    for (const auto& [k, c] : p2) {
        if (std::abs(c - sign * std::conj(value(p1, -k))) > kSymmetryTol * scale)
            return false;
    }
    return true;
}

void drop_zeros(Potential::CoeffMap& m) {
    for (auto it = m.begin(); it != m.end();) {
        if (it->second == cplx{})
            it = m.erase(it);
        else
            ++it;
    }
}

}  // namespace

std::string to_string(Symmetry s) {
    switch (s) {
        case Symmetry::generic: return "generic";
        case Symmetry::defocusing: return "defocusing";
        case Symmetry::focusing: return "focusing";
        case Symmetry::zero: return "zero";
        case Symmetry::constant: return "constant";
    }
    return "generic";
}

Potential::Potential() : tag_(Symmetry::zero) { finalize(); }

Potential::Potential(CoeffMap phi1, CoeffMap phi2, Symmetry tag)
    : c1_(std::move(phi1)), c2_(std::move(phi2)), tag_(tag) {
    drop_zeros(c1_);
    drop_zeros(c2_);
    finalize();
    check_symmetry_tag();
}

Potential Potential::zero() { return Potential(); }

Potential Potential::constant(cplx a, cplx b) {
    CoeffMap p1, p2;
    if (a != cplx{}) p1[0] = a;
    if (b != cplx{}) p2[0] = b;
    return Potential(std::move(p1), std::move(p2), Symmetry::constant);
}

void Potential::finalize() {
    radius_ = 0;
    for (const auto& [k, c] : c1_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw InputError("potential: non-finite coefficient");
        radius_ = std::max(radius_, std::abs(k));
    }
    for (const auto& [k, c] : c2_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw InputError("potential: non-finite coefficient");
        radius_ = std::max(radius_, std::abs(k));
    }
    dense1_.assign(2 * radius_ + 1, cplx{});
    dense2_.assign(2 * radius_ + 1, cplx{});
    for (const auto& [k, c] : c1_) dense1_[k + radius_] = c;
    for (const auto& [k, c] : c2_) dense2_[k + radius_] = c;
}

void Potential::check_symmetry_tag() const {
    switch (tag_) {
        case Symmetry::generic:
            return;
        case Symmetry::zero:
            if (!is_zero()) throw InputError("potential: 'zero' tag with nonzero coefficients");
            return;
        case Symmetry::constant:
            if (!is_constant())
                throw InputError("potential: 'constant' tag with nonconstant coefficients");
            return;
        case Symmetry::defocusing:
            if (!coeff_conj_related(c1_, c2_, +1.0))
                throw InputError("potential: 'defocusing' tag inconsistent with coefficients");
            return;
        case Symmetry::focusing:
            if (!coeff_conj_related(c1_, c2_, -1.0))
                throw InputError("potential: 'focusing' tag inconsistent with coefficients");
            return;
    }
}

bool Potential::is_constant() const {
    for (const auto& [k, c] : c1_)
        if (k != 0) return false;
    for (const auto& [k, c] : c2_)
        if (k != 0) return false;
    return true;
}

void Potential::eval(double x, cplx& p1, cplx& p2) const {
    if (radius_ == 0) {
        p1 = dense1_.empty() ? cplx{} : dense1_[0];
        p2 = dense2_.empty() ? cplx{} : dense2_[0];
        return;
    }
    const cplx z = std::polar(1.0, 2.0 * pi * x);
    // powers z^k for k = -radius..radius, built by repeated multiplication
    p1 = dense1_[radius_];
    p2 = dense2_[radius_];
    cplx zp = 1.0;
    for (int k = 1; k <= radius_; ++k) {
        zp *= z;
        const cplx zm = std::conj(zp);  // |z| = 1 for real x
        p1 += dense1_[radius_ + k] * zp + dense1_[radius_ - k] * zm;
        p2 += dense2_[radius_ + k] * zp + dense2_[radius_ - k] * zm;
    }
}

double Potential::norm() const {
    double s = 0.0;
    for (const auto& [k, c] : c1_) s += std::norm(c);
    for (const auto& [k, c] : c2_) s += std::norm(c);
    return std::sqrt(s);
}

Potential Potential::scaled_to_norm(double target) const {
    double n = norm();
    if (n == 0.0) throw InputError("potential: cannot rescale the zero potential");
    double f = target / n;
    CoeffMap p1 = c1_, p2 = c2_;
    for (auto& [k, c] : p1) c *= f;
    for (auto& [k, c] : p2) c *= f;
    Symmetry tag = tag_;
    if (tag == Symmetry::constant && target == 0.0) tag = Symmetry::zero;
    return Potential(std::move(p1), std::move(p2), tag);
}

Potential Potential::from_samples(const std::vector<cplx>& s1,
                                  const std::vector<cplx>& s2) {
    if (s1.empty() || s1.size() != s2.size())
        throw InputError("potential: sample arrays must be nonempty and equal length");
    const int n = static_cast<int>(s1.size());
    const int half = n / 2;
    auto dft = [&](const std::vector<cplx>& s) {
        CoeffMap out;
        for (int k = -half; k <= (n - 1) / 2; ++k) {
            cplx acc = 0.0;
            for (int j = 0; j < n; ++j)
                acc += s[j] * std::polar(1.0, -2.0 * pi * k * j / double(n));
            acc /= double(n);
            if (std::abs(acc) > 1e-15) out[k] = acc;
        }
        return out;
    };
    return Potential(dft(s1), dft(s2), Symmetry::generic);
}

Potential Potential::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("potential: bad JSON: ") + e.what());
    }
    if (j.contains("constant")) {
        const auto& c = j["constant"];
        auto rd = [&](const char* key) -> cplx {
            const auto& v = c.at(key);
            return {v.at(0).get<double>(), v.at(1).get<double>()};
        };
        return Potential::constant(rd("a"), rd("b"));
    }
    auto read_coeffs = [&](const char* key) {
        CoeffMap m;
        if (!j.contains(key)) return m;
        for (const auto& row : j[key]) {
            int k = row.at(0).get<int>();
            cplx c{row.at(1).get<double>(), row.at(2).get<double>()};
            if (m.count(k)) throw InputError("potential: duplicate frequency in " + std::string(key));
            m[k] = c;
        }
        return m;
    };
    if (j.contains("phi1_samples") || j.contains("phi2_samples")) {
        auto read_samples = [&](const char* key) {
            std::vector<cplx> s;
            for (const auto& row : j.at(key))
                s.push_back({row.at(0).get<double>(), row.at(1).get<double>()});
            return s;
        };
        return from_samples(read_samples("phi1_samples"), read_samples("phi2_samples"));
    }
    CoeffMap p1 = read_coeffs("phi1");
    CoeffMap p2 = read_coeffs("phi2");
    Symmetry tag = Symmetry::generic;
    if (j.contains("symmetry")) {
        std::string s = j["symmetry"].get<std::string>();
        if (s == "generic") tag = Symmetry::generic;
        else if (s == "defocusing") tag = Symmetry::defocusing;
        else if (s == "focusing") tag = Symmetry::focusing;
        else if (s == "zero") tag = Symmetry::zero;
        else if (s == "constant") tag = Symmetry::constant;
        else throw InputError("potential: unknown symmetry tag '" + s + "'");
    }
    return Potential(std::move(p1), std::move(p2), tag);
}

Potential Potential::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("potential: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string Potential::to_json_text() const {
    nlohmann::ordered_json j;
    auto coeffs = [](const CoeffMap& m) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& [k, c] : m) arr.push_back({k, c.real(), c.imag()});
        return arr;
    };
    j["phi1"] = coeffs(c1_);
    j["phi2"] = coeffs(c2_);
    j["symmetry"] = to_string(tag_);
    return j.dump();
}

std::uint64_t Potential::hash() const {
    // FNV-1a over the canonical JSON serialization
    std::string s = to_json_text();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace zs
