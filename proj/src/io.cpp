#include "affsg/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "affsg/errors.hpp"

namespace affsg {

AffineSemigroup SemigroupFile::semigroup() const {
  if (!generators)
    throw input_error("input file describes a PI monoid, not a generator list");
  return AffineSemigroup(dim, *generators);
}

PIMonoid SemigroupFile::pi_monoid() const {
  if (!is_pi())
    throw input_error("input file describes a generator list, not a PI monoid");
  return pi_construct(dim, *pi_t_generators, *pi_a);
}

SemigroupFile parse_semigroup_file(const Json& j) {
  if (!j.is_object()) throw input_error("input: top level must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned())
    throw input_error("input: missing or invalid 'dim'");
  SemigroupFile f;
  f.dim = j["dim"].get<std::size_t>();
  if (f.dim == 0) throw input_error("input: 'dim' must be positive");

  const bool has_gens = j.contains("generators");
  const bool has_pi = j.contains("pi");
  if (has_gens == has_pi)
    throw input_error("input: exactly one of 'generators' and 'pi' required");

  auto parse_vec = [&](const Json& a) {
    IntVec v = json_to_vec(a);
    if (v.size() != f.dim) throw input_error("input: vector of wrong length");
    if (!vec_is_nonneg(v)) throw input_error("input: negative entry");
    return v;
  };
  auto parse_list = [&](const Json& a) {
    if (!a.is_array()) throw input_error("input: generator list must be an array");
    std::vector<IntVec> vs;
    for (const Json& e : a) vs.push_back(parse_vec(e));
    return vs;
  };

  if (has_gens) {
    f.generators = parse_list(j["generators"]);
  } else {
    const Json& pi = j["pi"];
    if (!pi.is_object() || !pi.contains("a") || !pi.contains("t_generators"))
      throw input_error("input: 'pi' requires 'a' and 't_generators'");
    f.pi_a = parse_vec(pi["a"]);
    f.pi_t_generators = parse_list(pi["t_generators"]);
  }
  return f;
}

SemigroupFile load_semigroup_file(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw input_error(std::string("input: malformed JSON: ") + e.what());
  }
  return parse_semigroup_file(j);
}

namespace {
const Int kJsonIntLimit = Int(1) << 53;
}

Json int_to_json(const Int& v) {
  if (abs(v) <= kJsonIntLimit) return Json(v.get_si());
  return Json(v.get_str());
}

Int json_to_int(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw input_error("invalid integer string: " + j.get<std::string>());
    }
  }
  throw input_error("expected an integer or a decimal string");
}

Json vec_to_json(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

IntVec json_to_vec(const Json& j) {
  if (!j.is_array()) throw input_error("expected an array of integers");
  IntVec v;
  for (const Json& e : j) v.push_back(json_to_int(e));
  return v;
}

Json vecs_to_json(const std::vector<IntVec>& vs) {
  Json a = Json::array();
  for (const IntVec& v : vs) a.push_back(vec_to_json(v));
  return a;
}

Json rat_to_json(const Rat& r) {
  if (r.get_den() == 1) return int_to_json(r.get_num());
  return Json(r.get_num().get_str() + "/" + r.get_den().get_str());
}

Rat json_to_rat(const Json& j) {
  if (j.is_number_integer()) return Rat(json_to_int(j));
  if (j.is_string()) {
    try {
      Rat r(j.get<std::string>());
      r.canonicalize();
      return r;
    } catch (const std::invalid_argument&) {
      throw input_error("invalid rational string: " + j.get<std::string>());
    }
  }
  throw input_error("expected a rational as integer or string");
}

Json ratvec_to_json(const RatVec& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(rat_to_json(x));
  return a;
}

RatVec json_to_ratvec(const Json& j) {
  if (!j.is_array()) throw input_error("expected an array of rationals");
  RatVec v;
  for (const Json& e : j) v.push_back(json_to_rat(e));
  return v;
}

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json membership_to_json(const MembershipResult& m) {
  Json j;
  j["member"] = m.member;
  if (m.witness) j["witness"] = vec_to_json(*m.witness);
  if (!m.member) j["explored_levels"] = int_to_json(m.explored_levels);
  return j;
}

Json pf_result_to_json(const PFResult& pf) {
  Json j;
  j["elements"] = vecs_to_json(pf.elements);
  j["complete"] = pf.complete;
  switch (pf.method) {
    case PFMethod::GapFilter: j["method"] = "gap-filter"; break;
    case PFMethod::AperyMaximals: j["method"] = "apery-maximals"; break;
    case PFMethod::BoundedSearch: j["method"] = "bounded-search"; break;
  }
  if (pf.search_box) j["search_box"] = vec_to_json(*pf.search_box);
  return j;
}

Json apery_to_json(const AperySet& ap) {
  Json j;
  j["base"] = vec_to_json(ap.base);
  j["variant"] =
      ap.variant == AperyVariant::Restricted ? "restricted" : "classical";
  j["elements"] = vecs_to_json(ap.elements);
  j["complete"] = ap.complete;
  if (ap.search_box) j["search_box"] = vec_to_json(*ap.search_box);
  return j;
}

const char* csem_status_name(CSemStatus s) {
  switch (s) {
    case CSemStatus::Yes: return "yes";
    case CSemStatus::No: return "no";
    case CSemStatus::Unknown: return "unknown";
  }
  return "unknown";
}

const char* csem_reason_name(CSemNoReason r) {
  switch (r) {
    case CSemNoReason::RayWithoutGenerator: return "ray-without-generator";
    case CSemNoReason::RayMultiplierGcd: return "ray-multiplier-gcd";
    case CSemNoReason::GroupIndex: return "group-index";
  }
  return "unknown";
}

const char* mpd_status_name(MpdStatus s) {
  switch (s) {
    case MpdStatus::Yes: return "yes";
    case MpdStatus::No: return "no";
    case MpdStatus::Unknown: return "unknown";
  }
  return "unknown";
}

const char* irr_status_name(IrrStatus s) {
  switch (s) {
    case IrrStatus::CIrreducible: return "c-irreducible";
    case IrrStatus::NotIrreducible: return "not-irreducible";
    case IrrStatus::Unknown: return "unknown";
  }
  return "unknown";
}

} // namespace affsg
