#pragma once

#include <map>
#include <random>
#include <string>

#include "qhh/algebra.hpp"
#include "qhh/builtins.hpp"
#include "qhh/parser.hpp"

namespace qhh_test {

using namespace qhh;

template <class F>
Algebra<F> make_builtin(const F& K, const std::string& id, int degree_bound,
                        std::map<std::string, typename F::Elem> params = {}) {
    auto src = builtin_source(id);
    if (!src) throw std::invalid_argument("unknown builtin: " + id);
    AlgebraFile file = parse_algebra(*src);
    if (!file.params.empty() && params.empty()) params["q"] = K.from_int(2);
    auto rels = instantiate_relations(file, K, params);
    return Algebra<F>(K, file.quiver, rels, degree_bound, id);
}

template <class F>
Element<F> random_nf_element(const F& K, const Algebra<F>& A, std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    Element<F> e;
    for (int d = 0; d <= max_deg && d <= A.max_basis_degree(); ++d)
        for (const Path& p : A.basis()[d])
            e = Element<F>::add_term(K, e, p, K.from_int(coeff(rng)));
    return e;
}

} // namespace qhh_test
