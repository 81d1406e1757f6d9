#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

// Series failed to reach the requested tolerance within max_terms,
// or an adaptive quadrature exhausted its refinement budget.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation at a pole of the gamma function or of a hypergeometric sum.
class pole_error : public std::domain_error {
public:
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

// A connection formula requires a parameter difference to be non-integer;
// callers handle this with the perturbation policy.
class degenerate_parameter_error : public std::domain_error {
public:
    explicit degenerate_parameter_error(const std::string& what) : std::domain_error(what) {}
};

// A sum required to terminate does not.
class nonterminating_error : public std::domain_error {
public:
    explicit nonterminating_error(const std::string& what) : std::domain_error(what) {}
};

// Space parameters violate 2*nu > n or m <= floor(nu - n/2).
class admissibility_error : public std::invalid_argument {
public:
    explicit admissibility_error(const std::string& what) : std::invalid_argument(what) {}
};

// Requested exact construction exceeds the configured size bound.
class capacity_error : public std::length_error {
public:
    explicit capacity_error(const std::string& what) : std::length_error(what) {}
};

} // namespace bergman
