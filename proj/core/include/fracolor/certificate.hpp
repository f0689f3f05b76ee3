#ifndef FRACOLOR_CERTIFICATE_HPP
#define FRACOLOR_CERTIFICATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fracolor/construct.hpp"
#include "fracolor/graph.hpp"
#include "fracolor/oracle.hpp"

// Self-contained JSON certificates for results, and an independent checker.
// Every certificate embeds the graph, the parameters, and the claimed
// object, so a checker needs nothing else to validate the claim.

namespace fracolor {

// A verified coloring of g^{m/n}: the full color list in id order.
std::string coloring_certificate(const Graph& g, int m, int n, const ConstructResult& r);

// Outcome of an exact k-coloring search; a yes embeds the coloring.
std::string decision_certificate(const Graph& g, int m, int n, int k, const ColoringSearch& s);

// A clique in g^{m/n}, listed by vertex id.
std::string clique_certificate(const Graph& g, int m, int n, const CliqueResult& c);

// The full chromatic-gap record for the triangular prism study.
std::string counterexample_certificate(const PrismStudy& s);

// A bundle of independent certificates checked as one document.
std::string hunt_certificate(const std::vector<std::string>& member_certs);

struct CertificateCheck {
    bool ok = false;
    std::string kind;     // certificate kind that was checked
    std::string message;  // human-readable outcome
};

// Validates a certificate from its own content: colorings are re-verified
// against a freshly built power graph, cliques are re-checked pairwise,
// and negative verdicts are re-derived by a fresh exhaustive search when
// recompute is set (otherwise they are checked for internal consistency).
CertificateCheck check_certificate(const std::string& json_text, bool recompute = false,
                                   uint64_t node_budget = 200'000'000ULL);

}  // namespace fracolor

#endif  // FRACOLOR_CERTIFICATE_HPP
