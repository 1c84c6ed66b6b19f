#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ferrox/complexmath.hpp"
#include "ferrox/ferrers.hpp"

namespace ferrox {

// Olbricht's 72 hypergeometric solutions of the associated Legendre
// equation, 24 per argument group. Group III entries come in two versions,
// one per meaning of sqrt(x^2 - 1) (roots Y1 and Y2).

enum class OlbrichtGroup { I, II, III };
const char* to_string(OlbrichtGroup g);

struct OlbrichtId {
    OlbrichtGroup group;
    int index;                        // 1..24
    std::optional<RootVariant> root;  // Group III only; Y1 when absent
};

std::string to_string(const OlbrichtId& id);

enum class OlbrichtDomain { D1, D1NonReal, D1NoImagAxis, D1Plus, D2, D2Plus, D3 };
const char* to_string(OlbrichtDomain d);
bool in_domain(OlbrichtDomain d, cplx x);

// One per entry and root variant.
struct IdentityRecord {
    OlbrichtId id;
    std::string definition;  // prefactor and 2F1 parameters, human readable
    std::string reduction;   // what the entry equals
    OlbrichtDomain analytic_domain;
    OlbrichtDomain identity_domain;
    std::optional<OlbrichtId> same_as;  // set for duplicate entries
};

// Roots admitted by an entry: {Y1} for Group III entries 1-4 and 17-20,
// {Y1, Y2} for the other Group III entries, empty for Groups I and II.
std::vector<RootVariant> admitted_roots(OlbrichtGroup g, int index);

// Every (entry, root) pair: 48 records for Groups I and II plus 40 for Group III.
const std::vector<IdentityRecord>& olbricht_catalogue();
const IdentityRecord& identity_record(const OlbrichtId& id);

EvalOutcome eval_olbricht(const OlbrichtId& id, const ParamPair& p, cplx x, double tol = kDefaultTol);

// The right-hand side of the entry's reduction.
cplx olbricht_reduction(const OlbrichtId& id, const ParamPair& p, cplx x, double tol = kDefaultTol);

// Five fixed sample points inside a domain.
std::vector<cplx> domain_samples(OlbrichtDomain d);

struct IdentityReport {
    std::vector<double> residuals;  // |lhs - rhs| / max(|lhs|, |rhs|, tiny) per sample
    double max_residual = 0.0;
    std::vector<std::string> errors;  // samples that could not be evaluated
};

IdentityReport verify_identity(const OlbrichtId& id, const ParamPair& p, const std::vector<cplx>& x_samples,
                               double tol = kDefaultTol);

// Residual of the Legendre equation by five-point central differences with
// step h, divided by the sum of the magnitudes of its three terms.
double ode_residual(const OlbrichtId& id, const ParamPair& p, cplx x, double h = 1e-4);

}  // namespace ferrox
