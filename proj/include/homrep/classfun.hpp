#ifndef HOMREP_CLASSFUN_HPP
#define HOMREP_CLASSFUN_HPP

#include <cmath>
#include <string>
#include <vector>

#include "homrep/field.hpp"
#include "homrep/group_algorithms.hpp"

namespace homrep {

/// Class-function value: an exact rational, or a complex number carried at
/// 256-bit float precision (for table entries like roots of unity).
class CFValue {
public:
    static constexpr std::size_t kPrec = 256;

    CFValue() : exact_(true), q_(0) {}
    explicit CFValue(long n) : exact_(true), q_(n) {}
    explicit CFValue(mpq_class q) : exact_(true), q_(std::move(q)) {}
    CFValue(const mpf_class& re, const mpf_class& im)
        : exact_(false), re_(re, kPrec), im_(im, kPrec) {}

    static CFValue parse_decimal_pair(const std::string& re, const std::string& im) {
        return CFValue(mpf_class(re, kPrec), mpf_class(im, kPrec));
    }

    bool exact() const { return exact_; }
    const mpq_class& rational() const {
        ensure(exact_, "CFValue::rational on exact value");
        return q_;
    }

    mpf_class re() const { return exact_ ? mpf_class(q_, kPrec) : re_; }
    mpf_class im() const { return exact_ ? mpf_class(0, kPrec) : im_; }

    bool is_zero() const { return exact_ ? sgn(q_) == 0 : (sgn(re_) == 0 && sgn(im_) == 0); }

    CFValue conj() const {
        if (exact_) return *this;
        return CFValue(re_, -im_);
    }

    CFValue operator-() const {
        if (exact_) return CFValue(mpq_class(-q_));
        return CFValue(-re_, -im_);
    }

    friend CFValue operator+(const CFValue& a, const CFValue& b) {
        if (a.exact_ && b.exact_) return CFValue(mpq_class(a.q_ + b.q_));
        return CFValue(a.re() + b.re(), a.im() + b.im());
    }
    friend CFValue operator-(const CFValue& a, const CFValue& b) { return a + (-b); }
    friend CFValue operator*(const CFValue& a, const CFValue& b) {
        if (a.exact_ && b.exact_) return CFValue(mpq_class(a.q_ * b.q_));
        mpf_class re = a.re() * b.re() - a.im() * b.im();
        mpf_class im = a.re() * b.im() + a.im() * b.re();
        return CFValue(re, im);
    }

    CFValue divided_by(unsigned long n) const {
        if (exact_) return CFValue(mpq_class(q_ / mpq_class(static_cast<long>(n))));
        return CFValue(re_ / n, im_ / n);
    }

    mpf_class abs2() const {
        mpf_class r = re(), i = im();
        return r * r + i * i;
    }

    bool approx_equal(const CFValue& o, double tol = 1e-6) const {
        if (exact_ && o.exact_) return q_ == o.q_;
        mpf_class d = (*this - o).abs2();
        return d < mpf_class(tol * tol, kPrec);
    }

    /// Nearest integer, provided the value is within tol of one.
    bool near_integer(long& out, double tol = 1e-6) const {
        if (exact_) {
            if (q_.get_den() != 1) return false;
            out = mpz_class(q_.get_num()).get_si();
            return true;
        }
        if (abs(im_) >= mpf_class(tol, kPrec)) return false;
        mpf_class r = re_;
        double v = r.get_d();
        long n = std::lround(v);
        if (abs(r - n) >= mpf_class(tol, kPrec)) return false;
        out = n;
        return true;
    }

    std::string str() const {
        if (exact_) return q_.get_num().get_str() + "/" + q_.get_den().get_str();
        mp_exp_t e;
        // fixed 20 significant digits, deterministic
        auto fmt = [](const mpf_class& x) {
            char buf[64];
            gmp_snprintf(buf, sizeof buf, "%.20Fe", x.get_mpf_t());
            return std::string(buf);
        };
        (void)e;
        return fmt(re_) + (sgn(im_) >= 0 ? "+" : "") + fmt(im_) + "i";
    }

private:
    bool exact_;
    mpq_class q_;
    mpf_class re_, im_;
};

/// Exact-or-high-precision class function on an enumerated group.
class ClassFunction {
public:
    ClassFunction() = default;
    ClassFunction(GroupPtr g, std::vector<CFValue> values) : g_(std::move(g)), v_(std::move(values)) {
        if (v_.size() != g_->class_count())
            fail(Errc::bad_argument, "class function length != class count");
    }

    static ClassFunction trivial(const GroupPtr& g) {
        return ClassFunction(g, std::vector<CFValue>(g->class_count(), CFValue(1)));
    }

    static ClassFunction regular(const GroupPtr& g) {
        std::vector<CFValue> v(g->class_count());
        v[0] = CFValue(static_cast<long>(g->size()));
        return ClassFunction(g, v);
    }

    static ClassFunction zero(const GroupPtr& g) {
        return ClassFunction(g, std::vector<CFValue>(g->class_count()));
    }

    const GroupPtr& group() const { return g_; }
    std::size_t classes() const { return v_.size(); }
    const CFValue& on_class(std::size_t k) const { return v_[k]; }
    const CFValue& at_element(int i) const { return v_[static_cast<std::size_t>(g_->class_of(i))]; }
    const CFValue& at_identity() const { return v_[0]; }
    const std::vector<CFValue>& values() const { return v_; }

    bool all_exact() const {
        for (const auto& x : v_)
            if (!x.exact()) return false;
        return true;
    }

    friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
        ensure(a.g_->same_group(*b.g_), "class functions on the same group");
        std::vector<CFValue> v(a.v_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.v_[i] + b.v_[i];
        return ClassFunction(a.g_, std::move(v));
    }
    friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
        ensure(a.g_->same_group(*b.g_), "class functions on the same group");
        std::vector<CFValue> v(a.v_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.v_[i] - b.v_[i];
        return ClassFunction(a.g_, std::move(v));
    }
    /// Pointwise product: the tensor product in the Grothendieck ring.
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
        ensure(a.g_->same_group(*b.g_), "class functions on the same group");
        std::vector<CFValue> v(a.v_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.v_[i] * b.v_[i];
        return ClassFunction(a.g_, std::move(v));
    }

    ClassFunction scaled(long n) const {
        std::vector<CFValue> v(v_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = v_[i] * CFValue(n);
        return ClassFunction(g_, std::move(v));
    }

    bool operator==(const ClassFunction& o) const {
        if (!g_->same_group(*o.g_) || v_.size() != o.v_.size()) return false;
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (v_[i].exact() && o.v_[i].exact()) {
                if (!(v_[i].rational() == o.v_[i].rational())) return false;
            } else if (!v_[i].approx_equal(o.v_[i])) {
                return false;
            }
        }
        return true;
    }
    bool operator!=(const ClassFunction& o) const { return !(*this == o); }

    /// Standard Hermitian inner product <a, b> = (1/|G|) sum |c| a(c) conj(b(c)).
    CFValue inner(const ClassFunction& o) const {
        ensure(g_->same_group(*o.g_), "inner product on the same group");
        CFValue s;
        const auto& classes = g_->conjugacy_classes();
        for (std::size_t k = 0; k < classes.size(); ++k) {
            CFValue term = v_[k] * o.v_[k].conj();
            s = s + term * CFValue(static_cast<long>(classes[k].size()));
        }
        return s.divided_by(static_cast<unsigned long>(g_->size()));
    }

private:
    GroupPtr g_;
    std::vector<CFValue> v_;
};

/// Frobenius induction from a subgroup, evaluated exactly:
/// (chi^G)(g) = (1/|H|) sum over x in G with x g x^-1 in H of chi(x g x^-1).
inline ClassFunction induce_class_function(const Subgroup& h, const ClassFunction& chi) {
    const GroupPtr& g = h.parent();
    GroupPtr hg = h.as_group();
    ensure(chi.group()->same_group(*hg), "character lives on the subgroup");
    std::vector<CFValue> out(g->class_count());
    const auto reps = g->class_representatives();
    for (std::size_t k = 0; k < reps.size(); ++k) {
        CFValue s;
        for (std::size_t x = 0; x < g->size(); ++x) {
            int c = g->conj(static_cast<int>(x), reps[k]);
            if (!h.contains(c)) continue;
            int hi = hg->index_of(g->element(c));
            s = s + chi.at_element(hi);
        }
        out[k] = s.divided_by(static_cast<unsigned long>(h.size()));
    }
    return ClassFunction(g, std::move(out));
}

inline ClassFunction restrict_class_function(const ClassFunction& chi, const Subgroup& h) {
    GroupPtr hg = h.as_group();
    ensure(chi.group()->same_group(*h.parent()), "restriction from the parent group");
    std::vector<CFValue> out(hg->class_count());
    const auto reps = hg->class_representatives();
    for (std::size_t k = 0; k < reps.size(); ++k)
        out[k] = chi.at_element(chi.group()->index_of(hg->element(reps[k])));
    return ClassFunction(hg, std::move(out));
}

/// Validated list of irreducible characters.
class CharacterTable {
public:
    CharacterTable() = default;
    CharacterTable(GroupPtr g, std::vector<ClassFunction> irreducibles, std::string name = "")
        : g_(std::move(g)), irr_(std::move(irreducibles)), name_(std::move(name)) {
        validate();
    }

    const GroupPtr& group() const { return g_; }
    const std::vector<ClassFunction>& irreducibles() const { return irr_; }
    std::size_t size() const { return irr_.size(); }
    const std::string& name() const { return name_; }

    void validate() const {
        if (irr_.size() != g_->class_count())
            fail(Errc::schema_violation,
                 "character table '" + name_ + "': irreducible count != class count");
        for (const auto& chi : irr_)
            ensure(chi.group()->same_group(*g_), "table rows on the table's group");
        for (std::size_t i = 0; i < irr_.size(); ++i)
            for (std::size_t j = 0; j < irr_.size(); ++j) {
                CFValue ip = irr_[i].inner(irr_[j]);
                CFValue expect(i == j ? 1 : 0);
                bool ok = (ip.exact() && expect.exact()) ? ip.rational() == expect.rational()
                                                         : ip.approx_equal(expect);
                if (!ok)
                    fail(Errc::check_failed, "character table '" + name_ +
                                                 "': row orthogonality fails at (" +
                                                 std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }

    /// Multiplicities of chi in the irreducible basis; rejects class functions
    /// that are not virtual characters (non-integral multiplicities).
    std::vector<long> decompose(const ClassFunction& chi, double tol = 1e-6) const {
        ensure(chi.group()->same_group(*g_), "decompose on the table's group");
        std::vector<long> m(irr_.size());
        for (std::size_t i = 0; i < irr_.size(); ++i) {
            CFValue ip = chi.inner(irr_[i]);
            if (!ip.near_integer(m[i], tol))
                fail(Errc::check_failed, "not a virtual character: multiplicity " +
                                             std::to_string(i) + " is " + ip.str());
        }
        return m;
    }

private:
    GroupPtr g_;
    std::vector<ClassFunction> irr_;
    std::string name_;
};

} // namespace homrep

#endif
