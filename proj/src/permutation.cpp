#include "frobres/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "frobres/errors.hpp"

namespace frobres {

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int x : img_) {
        if (x < 0 || x >= n() || seen[x]) throw BadInputError("permutation images are not a bijection");
        seen[x] = true;
    }
}

Permutation Permutation::parse(const std::string& s, int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> used(n, false);

    size_t i = 0;
    auto skip_ws = [&]() {
        while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    while (i < s.size()) {
        if (s[i] != '(') throw BadInputError("expected '(' in cycle string \"" + s + "\"");
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (i < s.size() && s[i] == ')') {
                ++i;
                break;
            }
            size_t j = i;
            while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) throw BadInputError("expected point number in cycle string \"" + s + "\"");
            int pt = std::stoi(s.substr(i, j - i));
            if (pt < 1 || pt > n)
                throw BadInputError("point " + std::to_string(pt) + " out of range 1.." + std::to_string(n));
            if (used[pt - 1]) throw BadInputError("point " + std::to_string(pt) + " repeated in cycle string");
            used[pt - 1] = true;
            cyc.push_back(pt - 1);
            i = j;
            skip_ws();
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
        }
        for (size_t k = 0; k < cyc.size(); ++k) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
        skip_ws();
    }
    return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& o) const {
    std::vector<int> v(n());
    for (int i = 0; i < n(); ++i) v[i] = img_[o.img_[i]];
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> v(n());
    for (int i = 0; i < n(); ++i) v[img_[i]] = i;
    return Permutation(std::move(v));
}

Permutation Permutation::power(long k) const {
    Permutation r = identity(n());
    Permutation b = *this;
    while (k > 0) {
        if (k & 1) r = r.compose(b);
        b = b.compose(b);
        k >>= 1;
    }
    return r;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (img_[i] != i) return false;
    return true;
}

bool Permutation::is_even() const {
    int transpositions = 0;
    for (int len : cycle_type()) transpositions += len - 1;
    return (transpositions & 1) == 0;
}

int Permutation::order() const {
    long o = 1;
    for (int len : cycle_type()) o = std::lcm(o, static_cast<long>(len));
    return static_cast<int>(o);
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<bool> seen(n(), false);
    std::vector<int> t;
    for (int i = 0; i < n(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img_[j];
            ++len;
        }
        t.push_back(len);
    }
    std::sort(t.begin(), t.end());
    return t;
}

std::string Permutation::cycle_string() const {
    std::vector<bool> seen(n(), false);
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < n(); ++i) {
        if (seen[i] || img_[i] == i) {
            seen[i] = true;
            continue;
        }
        any = true;
        os << "(" << i + 1;
        seen[i] = true;
        for (int j = img_[i]; j != i; j = img_[j]) {
            os << "," << j + 1;
            seen[j] = true;
        }
        os << ")";
    }
    return any ? os.str() : "()";
}

} // namespace frobres
