#pragma once

#include <json.hpp>

#include "tacnode/combinatorics.hpp"
#include "tacnode/k3.hpp"
#include "tacnode/loci.hpp"
#include "tacnode/polyalg.hpp"
#include "tacnode/shabat.hpp"

// JSON encodings. Complex numbers are [re, im] pairs; doubles round-trip exactly.
namespace tacnode {

using json = nlohmann::json;

json complex_json(cplx z);
cplx complex_from_json(const json& j);

void to_json(json& j, const AdmissibleTuple& t);
AdmissibleTuple tuple_from_json(const json& j);

void to_json(json& j, const Profile& p);
void from_json(const json& j, Profile& p);

void to_json(json& j, const Permutation& p);
void to_json(json& j, const PermutationTriple& t);
PermutationTriple triple_from_json(const json& j);

void to_json(json& j, const MonicPoly& p);
MonicPoly poly_from_json(const json& j);

void to_json(json& j, const VersalPoint& p);
void from_json(const json& j, VersalPoint& p);

void to_json(json& j, const SingularityProfile& p);
void from_json(const json& j, SingularityProfile& p);

void to_json(json& j, const RootCluster& c);

void to_json(json& j, const ShabatSolution& s);
ShabatSolution solution_from_json(const json& j);

void to_json(json& j, const BranchParam& b);
void to_json(json& j, const MultiplicityReport& r);

namespace k3 {
void to_json(json& j, const K3Budget& b);
void to_json(json& j, const RegularityCheck& r);
}  // namespace k3

}  // namespace tacnode
