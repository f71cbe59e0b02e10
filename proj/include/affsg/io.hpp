#ifndef AFFSG_IO_HPP
#define AFFSG_IO_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "affsg/constructions.hpp"
#include "affsg/frobenius.hpp"
#include "affsg/gaps.hpp"
#include "affsg/semigroup.hpp"

namespace affsg {

using Json = nlohmann::json;

/// Parsed input file: either a plain generator list or a principal-ideal
/// description {a, t_generators}; exactly one of the two.
struct SemigroupFile {
  std::size_t dim = 0;
  std::optional<std::vector<IntVec>> generators;
  std::optional<IntVec> pi_a;
  std::optional<std::vector<IntVec>> pi_t_generators;

  bool is_pi() const { return pi_a.has_value(); }
  AffineSemigroup semigroup() const;
  PIMonoid pi_monoid() const;
};

SemigroupFile parse_semigroup_file(const Json& j);
SemigroupFile load_semigroup_file(const std::string& path);

/// Integers are emitted as JSON numbers up to 2^53 in magnitude and as
/// decimal strings beyond; parsing accepts both forms.
Json int_to_json(const Int& v);
Int json_to_int(const Json& j);
Json vec_to_json(const IntVec& v);
IntVec json_to_vec(const Json& j);
Json vecs_to_json(const std::vector<IntVec>& vs);
Json rat_to_json(const Rat& r);
Rat json_to_rat(const Json& j);
Json ratvec_to_json(const RatVec& v);
RatVec json_to_ratvec(const Json& j);

/// FNV-1a 64-bit digest of a byte string, as fixed-width hex.
std::string fnv1a_digest(const std::string& bytes);

std::string read_file(const std::string& path);

Json membership_to_json(const MembershipResult& m);
Json pf_result_to_json(const PFResult& pf);
Json apery_to_json(const AperySet& ap);

const char* csem_status_name(CSemStatus s);
const char* csem_reason_name(CSemNoReason r);
const char* mpd_status_name(MpdStatus s);
const char* irr_status_name(IrrStatus s);

} // namespace affsg

#endif
