#pragma once

#include <random>
#include <set>
#include <vector>

#include "ramicalc/lambda.hpp"

namespace ramicalc::testsupport {

/* deterministic random Lambda_p instances for the property suites */
inline LambdaP random_lambda(std::mt19937_64& rng, long p, int max_breaks = 4) {
    std::uniform_int_distribution<int> nb(0, max_breaks);
    int n = nb(rng);
    std::uniform_int_distribution<long> num(1, 24), den(1, 6), step(1, 2);
    std::set<Rat> vs;
    while (static_cast<int>(vs.size()) < n) vs.insert(Rat(num(rng), den(rng)));
    std::vector<LogValue> breaks;
    for (auto it = vs.rbegin(); it != vs.rend(); ++it)  // descending v = increasing b
        breaks.push_back(LogValue::from_v(*it));
    std::vector<long> alphas{0};
    for (int i = 0; i < n; ++i) alphas.push_back(alphas.back() + step(rng));
    return make_lambda(Prime(p), breaks, alphas);
}

inline long random_prime(std::mt19937_64& rng) {
    static const long ps[] = {2, 3, 5};
    std::uniform_int_distribution<int> d(0, 2);
    return ps[d(rng)];
}

}  // namespace ramicalc::testsupport
