#ifndef DPB_LIN_COMB_HPP
#define DPB_LIN_COMB_HPP

#include <map>

#include "dpb/rational.hpp"

namespace dpb {

// Sparse linear combination over Q with canonical (sorted, zero-pruned)
// representation, so equality of elements is map equality.
template <class K>
class LinComb {
public:
    using Terms = std::map<K, Rat>;

    LinComb() = default;

    static LinComb term(K key, Rat coeff = Rat(1)) {
        LinComb r;
        r.add(std::move(key), std::move(coeff));
        return r;
    }

    void add(K key, Rat coeff) {
        if (coeff == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    bool zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_)
            add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_)
            add(k, -c);
        return *this;
    }
    LinComb& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_)
            c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Rat& s) { return a *= s; }
    friend LinComb operator*(const Rat& s, LinComb a) { return a *= s; }
    friend LinComb operator-(LinComb a) { return a *= Rat(-1); }

    friend bool operator==(const LinComb& a, const LinComb& b) {
        return a.terms_ == b.terms_;
    }

private:
    Terms terms_;
};

} // namespace dpb

#endif
