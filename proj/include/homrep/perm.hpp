#ifndef HOMREP_PERM_HPP
#define HOMREP_PERM_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "homrep/error.hpp"

namespace homrep {

/// Permutation of {0..n-1}, stored as its image array.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::size_t degree) : img_(degree) {
        for (std::size_t i = 0; i < degree; ++i) img_[i] = static_cast<int>(i);
    }
    explicit Perm(std::vector<int> img) : img_(std::move(img)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || static_cast<std::size_t>(v) >= img_.size() || seen[v])
                fail(Errc::schema_violation, "permutation image array is not a bijection");
            seen[v] = true;
        }
    }

    std::size_t degree() const { return img_.size(); }
    int operator()(int i) const { return img_[i]; }

    /// (a*b)(i) = a(b(i)) : apply b first. Left action on points is g.i = g(i).
    friend Perm operator*(const Perm& a, const Perm& b) {
        ensure(a.degree() == b.degree(), "perm degrees match");
        Perm r;
        r.img_.resize(a.degree());
        for (std::size_t i = 0; i < a.degree(); ++i) r.img_[i] = a.img_[b.img_[i]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.img_.resize(degree());
        for (std::size_t i = 0; i < degree(); ++i) r.img_[img_[i]] = static_cast<int>(i);
        return r;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < degree(); ++i)
            if (img_[i] != static_cast<int>(i)) return false;
        return true;
    }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    /// Cycle notation on the moved points; identity prints as "()".
    std::string str() const {
        std::string out;
        std::vector<bool> seen(degree(), false);
        for (std::size_t i = 0; i < degree(); ++i) {
            if (seen[i] || img_[i] == static_cast<int>(i)) continue;
            out += "(";
            std::size_t j = i;
            bool first = true;
            while (!seen[j]) {
                seen[j] = true;
                if (!first) out += " ";
                out += std::to_string(j);
                first = false;
                j = static_cast<std::size_t>(img_[j]);
            }
            out += ")";
        }
        return out.empty() ? "()" : out;
    }

    /// Parse cycle notation, e.g. "(0 1)(2 3)" or "()". Commas also accepted.
    static Perm parse(const std::string& s, std::size_t degree) {
        std::vector<int> img(degree);
        for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<int>(i);
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
        };
        skip_ws();
        while (pos < s.size()) {
            if (s[pos] != '(') fail(Errc::schema_violation, "bad cycle notation: '" + s + "'");
            ++pos;
            std::vector<int> cyc;
            skip_ws();
            while (pos < s.size() && s[pos] != ')') {
                if (s[pos] == ',' || s[pos] == ' ') {
                    ++pos;
                    continue;
                }
                std::size_t end = pos;
                while (end < s.size() && s[end] >= '0' && s[end] <= '9') ++end;
                if (end == pos) fail(Errc::schema_violation, "bad cycle notation: '" + s + "'");
                int v = std::stoi(s.substr(pos, end - pos));
                if (v < 0 || static_cast<std::size_t>(v) >= degree)
                    fail(Errc::schema_violation, "cycle entry out of range in '" + s + "'");
                cyc.push_back(v);
                pos = end;
            }
            if (pos >= s.size()) fail(Errc::schema_violation, "unclosed cycle in '" + s + "'");
            ++pos; // ')'
            for (std::size_t i = 0; i + 1 < cyc.size(); ++i) img[cyc[i]] = cyc[i + 1];
            if (cyc.size() >= 2) img[cyc.back()] = cyc.front();
            skip_ws();
        }
        return Perm(std::move(img));
    }

    const std::vector<int>& image() const { return img_; }

private:
    std::vector<int> img_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : p.image()) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace homrep

#endif
