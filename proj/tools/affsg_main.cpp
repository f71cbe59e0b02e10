#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "affsg/constructions.hpp"
#include "affsg/errors.hpp"
#include "affsg/frobenius.hpp"
#include "affsg/gaps.hpp"
#include "affsg/io.hpp"

using namespace affsg;

namespace {

IntVec parse_int_vec(const std::string& s) {
  IntVec v;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos
                                        ? std::string::npos
                                        : comma - pos);
    if (tok.empty()) throw input_error("empty vector component in '" + s + "'");
    try {
      v.push_back(Int(tok));
    } catch (const std::invalid_argument&) {
      throw input_error("invalid integer '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return v;
}

std::vector<IntVec> parse_vec_list(const std::string& s) {
  std::vector<IntVec> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t semi = s.find(';', pos);
    std::string tok = s.substr(pos, semi == std::string::npos
                                        ? std::string::npos
                                        : semi - pos);
    if (!tok.empty()) out.push_back(parse_int_vec(tok));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return out;
}

struct CommandResult {
  std::string status = "ok";
  Json payload = Json::object();
  Json certificates = Json::object();
};

// At-bound detection for list-producing commands; verdict commands (mpd,
// pi limit) are definitive through their status even when the attached
// element list is partial.
bool payload_incomplete(const Json& payload) {
  if (payload.contains("complete") && payload["complete"].is_boolean())
    return !payload["complete"].get<bool>();
  return false;
}

Json pf_evidence_json(const AffineSemigroup& s, const std::vector<IntVec>& pf) {
  Json ev = Json::array();
  for (const IntVec& a : pf) {
    PFEvidence e = is_pseudo_frobenius(s, a);
    Json translates = Json::array();
    for (std::size_t i = 0; i < e.generator_witnesses.size(); ++i) {
      Json t;
      t["generator"] = vec_to_json(s.gens()[i]);
      t["membership"] = membership_to_json(e.generator_witnesses[i]);
      translates.push_back(std::move(t));
    }
    Json item;
    item["element"] = vec_to_json(a);
    item["is_pf"] = e.is_pf;
    item["translates"] = std::move(translates);
    ev.push_back(std::move(item));
  }
  return ev;
}

// ---------------------------------------------------------------------------
// Command implementations (shared between the main dispatch and `verify`)
// ---------------------------------------------------------------------------

CommandResult cmd_info(const SemigroupFile& f) {
  AffineSemigroup s = f.semigroup();
  CommandResult r;
  r.payload["dim"] = s.dim();
  r.payload["generators"] = vecs_to_json(s.gens());
  r.payload["minimal_generators"] = vecs_to_json(s.minimal_generators());
  r.payload["span_dim"] = s.cone().span_dim();
  r.payload["extreme_rays"] = vecs_to_json(s.cone().extreme_rays());
  r.payload["facets"] = vecs_to_json(s.cone().facets());
  r.payload["grading"] = vec_to_json(s.grading());
  r.payload["group_rank"] = s.group().rank();
  r.payload["group_index"] = int_to_json(group_index(s));
  return r;
}

CommandResult cmd_gaps(const SemigroupFile& f, const Int& nmax) {
  AffineSemigroup s = f.semigroup();
  CSemVerdict v = decide_c_semigroup(s, nmax);
  CommandResult r;
  r.status = csem_status_name(v.status);
  if (v.status == CSemStatus::Yes) {
    r.status = "ok";
    r.payload["count"] = v.gaps.size();
    r.payload["gaps"] = vecs_to_json(v.gaps);
    r.certificates["ray_elements"] = vecs_to_json(v.ray_elements);
    Json table = Json::array();
    for (const SaturationEntry& e : v.saturation) {
      Json row;
      row["base"] = vec_to_json(e.base);
      Json steps = Json::array();
      for (const Int& n : e.steps) steps.push_back(int_to_json(n));
      row["steps"] = std::move(steps);
      table.push_back(std::move(row));
    }
    r.certificates["saturation"] = std::move(table);
  } else if (v.status == CSemStatus::No) {
    r.payload["reason"] = csem_reason_name(*v.reason);
    if (v.reason_ray) r.payload["ray"] = vec_to_json(*v.reason_ray);
    if (v.reason_gcd) r.payload["ray_gcd"] = int_to_json(*v.reason_gcd);
    if (v.reason_index) r.payload["group_index"] = int_to_json(*v.reason_index);
  } else {
    r.payload["exhausted_bound"] = int_to_json(v.exhausted_bound);
  }
  return r;
}

CommandResult cmd_pf(const SemigroupFile& f, const Int& nmax,
                     const std::optional<IntVec>& box) {
  AffineSemigroup s = f.semigroup();
  PFResult pf;
  if (box) {
    pf = pseudo_frobenius_bounded(s, *box);
  } else {
    CSemVerdict v = decide_c_semigroup(s, nmax);
    if (v.status == CSemStatus::Yes) {
      pf = pseudo_frobenius_csem(s, nmax);
    } else if (auto sat = pseudo_frobenius_saturated(s, nmax)) {
      pf = std::move(*sat);
    } else {
      pf = pseudo_frobenius_bounded(s, default_box(s));
    }
  }
  CommandResult r;
  r.payload = pf_result_to_json(pf);
  r.certificates["evidence"] = pf_evidence_json(s, pf.elements);
  return r;
}

CommandResult cmd_frobenius(const SemigroupFile& f, const Int& nmax,
                            const std::string& order) {
  AffineSemigroup s = f.semigroup();
  CommandResult r;
  CSemVerdict v = decide_c_semigroup(s, nmax);
  if (v.status != CSemStatus::Yes) {
    r.status = csem_status_name(v.status);
    if (v.reason) r.payload["reason"] = csem_reason_name(*v.reason);
    return r;
  }
  std::vector<FrobeniusCert> certs = frobenius_elements(s, nmax);
  Json elems = Json::array();
  for (const FrobeniusCert& c : certs) {
    Json e;
    e["f"] = vec_to_json(c.f);
    e["w"] = ratvec_to_json(c.w);
    elems.push_back(std::move(e));
  }
  r.payload["elements"] = std::move(elems);
  r.payload["gap_count"] = v.gaps.size();
  if (!order.empty() && !v.gaps.empty()) {
    TermOrder ord = order == "lex"    ? TermOrder::lex(s.dim())
                    : order == "grlex" ? TermOrder::grlex(s.dim())
                                       : TermOrder::grevlex(s.dim());
    r.payload["max_under_order"] = vec_to_json(max_under_order(v.gaps, ord));
    r.payload["order"] = order;
  }
  return r;
}

CommandResult cmd_apery(const SemigroupFile& f, const IntVec& base,
                        const std::string& variant,
                        const std::optional<IntVec>& box, const Int& nmax) {
  AffineSemigroup s = f.semigroup();
  AperyVariant var = variant == "classical" ? AperyVariant::Classical
                                            : AperyVariant::Restricted;
  AperySet ap = apery(s, base, var, box, nmax);
  CommandResult r;
  r.payload = apery_to_json(ap);
  r.certificates["base_membership"] = membership_to_json(s.member(base));
  return r;
}

CommandResult cmd_mpd(const SemigroupFile& f, const Int& nmax,
                      const std::optional<IntVec>& box) {
  AffineSemigroup s = f.semigroup();
  MpdVerdict v = is_mpd(s, nmax, box);
  CommandResult r;
  r.status = mpd_status_name(v.status);
  if (v.status == MpdStatus::Yes) r.status = "ok";
  r.payload["mpd"] = mpd_status_name(v.status);
  r.payload["reason"] = v.reason;
  if (v.pf) {
    r.payload["pf"] = pf_result_to_json(*v.pf);
    r.certificates["evidence"] = pf_evidence_json(s, v.pf->elements);
  }
  return r;
}

CommandResult cmd_bound(const SemigroupFile& f) {
  AffineSemigroup s = f.semigroup();
  CommandResult r;
  r.payload["n"] = s.gens().size();
  r.payload["d"] = s.dim();
  r.payload["norm_inf"] = int_to_json(matrix_inf_norm(s));
  r.payload["bound"] = int_to_json(pf_length_bound(s));
  return r;
}

CommandResult cmd_glue(const SemigroupFile& f1, const SemigroupFile& f2,
                       const IntVec& d, const std::optional<IntVec>& pf1,
                       const std::optional<IntVec>& pf2) {
  AffineSemigroup s1 = f1.semigroup();
  AffineSemigroup s2 = f2.semigroup();
  GluingCheck check = check_gluing(s1, s2, d);
  CommandResult r;
  if (!check.cert) {
    r.status = "no";
    switch (*check.failure) {
      case GluingFailure::DNotInIntersection:
        r.payload["failure"] = "d-not-in-intersection";
        break;
      case GluingFailure::IntersectionRankNotOne:
        r.payload["failure"] = "intersection-rank-not-one";
        break;
      case GluingFailure::IntersectionGeneratorMismatch:
        r.payload["failure"] = "intersection-generator-mismatch";
        break;
      case GluingFailure::TrivialDecomposition:
        r.payload["failure"] = "trivial-decomposition";
        break;
    }
    r.payload["detail"] = check.detail;
    return r;
  }
  const GluingCert& cert = *check.cert;
  r.payload["d"] = vec_to_json(cert.d_vec);
  r.payload["intersection_basis"] = vecs_to_json(cert.intersection.basis());
  r.payload["glued_generators"] = vecs_to_json(cert.glued.gens());
  r.certificates["d_in_s1"] = membership_to_json(cert.d_in_s1);
  r.certificates["d_in_s2"] = membership_to_json(cert.d_in_s2);
  if (pf1 && pf2) {
    IntVec g = pf_of_gluing(cert, s1, s2, *pf1, *pf2);
    r.payload["pf_of_gluing"] = vec_to_json(g);
    r.certificates["pf_evidence"] = pf_evidence_json(cert.glued, {g});
  }
  return r;
}

CommandResult cmd_irreducible(const SemigroupFile& f, const Int& nmax) {
  AffineSemigroup s = f.semigroup();
  IrreducibilityVerdict v = irreducibility_verdict(s, nmax);
  CommandResult r;
  r.status = v.status == IrrStatus::CIrreducible     ? "ok"
             : v.status == IrrStatus::NotIrreducible ? "no"
                                                     : "unknown";
  r.payload["verdict"] = irr_status_name(v.status);
  r.payload["reason"] = v.reason;
  if (v.pf) r.payload["pf"] = pf_result_to_json(*v.pf);
  if (!v.shape.empty()) r.payload["shape"] = v.shape;
  if (v.witness_a1) {
    r.payload["witness_a1"] = vec_to_json(*v.witness_a1);
    r.payload["witness_a2"] = vec_to_json(*v.witness_a2);
    r.payload["verify_box"] = vec_to_json(*v.verify_box);
  }
  Json fr = Json::array();
  for (const FrobeniusCert& c : v.frobenius) {
    Json e;
    e["f"] = vec_to_json(c.f);
    e["w"] = ratvec_to_json(c.w);
    fr.push_back(std::move(e));
  }
  r.certificates["frobenius"] = std::move(fr);
  return r;
}

PIMonoid pi_of_file(const SemigroupFile& f) {
  if (f.is_pi()) return f.pi_monoid();
  return pi_decompose(f.semigroup());
}

CommandResult cmd_pi_check(const SemigroupFile& f) {
  CommandResult r;
  if (f.is_pi()) {
    PIMonoid p = f.pi_monoid();
    r.payload["is_pi"] = true;
    r.payload["m"] = vec_to_json(multiplicity(p));
    r.certificates["offset_membership"] = membership_to_json(p.offset_witness());
    return r;
  }
  AffineSemigroup s = f.semigroup();
  PiCheck c = is_pi_monoid(s);
  r.status = c.is_pi ? "ok" : "no";
  r.payload["is_pi"] = c.is_pi;
  r.payload["m"] = vec_to_json(c.m);
  r.payload["m_is_member"] = c.m_is_member;
  r.payload["pairs_checked"] = c.pairs_checked;
  if (c.failing_pair) {
    r.payload["failing_pair"] = Json::array(
        {vec_to_json(c.failing_pair->first), vec_to_json(c.failing_pair->second)});
  }
  return r;
}

CommandResult cmd_pi_decompose(const SemigroupFile& f) {
  PIMonoid p = pi_of_file(f);
  CommandResult r;
  r.payload["a"] = vec_to_json(p.offset());
  r.payload["t_generators"] = vecs_to_json(p.t().gens());
  r.certificates["offset_membership"] = membership_to_json(p.offset_witness());
  return r;
}

CommandResult cmd_pi_pf(const SemigroupFile& f,
                        const std::optional<IntVec>& box) {
  PIMonoid p = pi_of_file(f);
  PFResult pf = pi_pseudo_frobenius(p, box);
  CommandResult r;
  r.payload = pf_result_to_json(pf);
  return r;
}

CommandResult cmd_pi_generators(const SemigroupFile& f,
                                const std::optional<IntVec>& box) {
  PIMonoid p = pi_of_file(f);
  PiGenerators g = pi_minimal_generators(p, box);
  CommandResult r;
  r.payload["elements"] = vecs_to_json(g.elements);
  r.payload["complete"] = g.complete;
  if (g.search_box) r.payload["search_box"] = vec_to_json(*g.search_box);
  return r;
}

CommandResult cmd_pi_limit(const SemigroupFile& f,
                           const std::vector<IntVec>& lambda,
                           const Int& nmax) {
  PIMonoid p = pi_of_file(f);
  DirectLimitPiece piece = direct_limit_family(p, lambda, nmax);
  CommandResult r;
  r.payload["lambda"] = vecs_to_json(lambda);
  r.payload["generators"] = vecs_to_json(piece.semigroup.gens());
  r.payload["mpd"] = mpd_status_name(piece.mpd.status);
  r.payload["mpd_reason"] = piece.mpd.reason;
  if (piece.mpd.pf) r.payload["pf"] = pf_result_to_json(*piece.mpd.pf);
  Json w = Json::array();
  for (const MembershipResult& m : piece.generators_in_monoid)
    w.push_back(membership_to_json(m));
  r.certificates["generators_in_monoid"] = std::move(w);
  return r;
}

// ---------------------------------------------------------------------------
// Envelope plumbing
// ---------------------------------------------------------------------------

Json input_descriptor(const std::string& path) {
  Json j;
  j["path"] = path;
  j["digest"] = "fnv1a-64:" + fnv1a_digest(read_file(path));
  return j;
}

CommandResult dispatch(const std::string& command, const Json& params,
                       const std::vector<std::string>& files) {
  auto opt_box = [&]() -> std::optional<IntVec> {
    if (params.contains("box")) return json_to_vec(params["box"]);
    return std::nullopt;
  };
  Int nmax = params.contains("nmax") ? json_to_int(params["nmax"]) : Int(1024);

  if (command == "info") return cmd_info(load_semigroup_file(files.at(0)));
  if (command == "gaps") return cmd_gaps(load_semigroup_file(files.at(0)), nmax);
  if (command == "pf")
    return cmd_pf(load_semigroup_file(files.at(0)), nmax, opt_box());
  if (command == "frobenius")
    return cmd_frobenius(load_semigroup_file(files.at(0)), nmax,
                         params.value("order", std::string()));
  if (command == "apery")
    return cmd_apery(load_semigroup_file(files.at(0)),
                     json_to_vec(params.at("base")),
                     params.value("variant", std::string("restricted")),
                     opt_box(), nmax);
  if (command == "mpd")
    return cmd_mpd(load_semigroup_file(files.at(0)), nmax, opt_box());
  if (command == "bound") return cmd_bound(load_semigroup_file(files.at(0)));
  if (command == "glue") {
    std::optional<IntVec> pf1, pf2;
    if (params.contains("pf1")) pf1 = json_to_vec(params["pf1"]);
    if (params.contains("pf2")) pf2 = json_to_vec(params["pf2"]);
    return cmd_glue(load_semigroup_file(files.at(0)),
                    load_semigroup_file(files.at(1)),
                    json_to_vec(params.at("d")), pf1, pf2);
  }
  if (command == "irreducible")
    return cmd_irreducible(load_semigroup_file(files.at(0)), nmax);
  if (command == "pi-check") return cmd_pi_check(load_semigroup_file(files.at(0)));
  if (command == "pi-decompose")
    return cmd_pi_decompose(load_semigroup_file(files.at(0)));
  if (command == "pi-pf")
    return cmd_pi_pf(load_semigroup_file(files.at(0)), opt_box());
  if (command == "pi-generators")
    return cmd_pi_generators(load_semigroup_file(files.at(0)), opt_box());
  if (command == "pi-limit") {
    std::vector<IntVec> lambda;
    for (const Json& v : params.at("lambda")) lambda.push_back(json_to_vec(v));
    return cmd_pi_limit(load_semigroup_file(files.at(0)), lambda, nmax);
  }
  throw input_error("unknown command: " + command);
}

int emit_envelope(const std::string& command, const Json& params,
                  const std::vector<std::string>& files, bool timing) {
  Json envelope;
  envelope["command"] = command;
  if (files.size() == 1) {
    envelope["input"] = input_descriptor(files[0]);
  } else {
    Json inputs = Json::array();
    for (const std::string& f : files) inputs.push_back(input_descriptor(f));
    envelope["inputs"] = std::move(inputs);
  }
  envelope["params"] = params;

  int exit_code = 0;
  auto start = std::chrono::steady_clock::now();
  try {
    CommandResult r = dispatch(command, params, files);
    envelope["status"] = r.status;
    envelope["payload"] = std::move(r.payload);
    envelope["certificates"] = std::move(r.certificates);
    if (r.status == "error")
      exit_code = 1;
    else if (r.status == "unknown" || payload_incomplete(envelope["payload"]))
      exit_code = 2;
  } catch (const input_error& e) {
    envelope["status"] = "error";
    envelope["error"] = {{"kind", "input"}, {"message", e.what()}};
    exit_code = 1;
  } catch (const precondition_error& e) {
    envelope["status"] = "error";
    envelope["error"] = {{"kind", "precondition"}, {"message", e.what()}};
    exit_code = 1;
  } catch (const state_error& e) {
    envelope["status"] = "error";
    envelope["error"] = {{"kind", "state"}, {"message", e.what()}};
    exit_code = 1;
  } catch (const internal_error& e) {
    envelope["status"] = "error";
    envelope["error"] = {{"kind", "internal"}, {"message", e.what()}};
    exit_code = 1;
  }
  if (timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    envelope["timing_ms"] = ms;
  }
  std::cout << envelope.dump(2) << "\n";
  return exit_code;
}

// Independent arithmetic re-checks of the emitted certificates; these do not
// reuse the computation path.
void recheck_certificates(const std::string& command, const Json& envelope,
                          const std::vector<std::string>& files,
                          std::vector<std::pair<std::string, bool>>& checks) {
  const Json& payload = envelope["payload"];
  const Json& certs = envelope["certificates"];

  auto witness_sums_to = [](const std::vector<IntVec>& gens, const Json& wit,
                            const IntVec& target) {
    IntVec u = json_to_vec(wit);
    if (u.size() != gens.size()) return false;
    IntVec acc(target.size(), 0);
    for (std::size_t i = 0; i < gens.size(); ++i)
      acc = vec_add(acc, vec_scale(u[i], gens[i]));
    return acc == target;
  };

  if (command == "pf" || command == "mpd" || command == "glue") {
    const char* key = command == "glue" ? "pf_evidence" : "evidence";
    if (!certs.contains(key)) return;
    std::vector<IntVec> gens;
    if (command == "glue") {
      for (const Json& g : payload["glued_generators"])
        gens.push_back(json_to_vec(g));
    } else {
      SemigroupFile f = load_semigroup_file(files.at(0));
      gens = *f.generators;
    }
    bool ok = true;
    for (const Json& item : certs[key]) {
      IntVec a = json_to_vec(item["element"]);
      if (!item["is_pf"].get<bool>()) ok = false;
      for (const Json& t : item["translates"]) {
        IntVec g = json_to_vec(t["generator"]);
        const Json& m = t["membership"];
        if (!m["member"].get<bool>() ||
            !witness_sums_to(gens, m["witness"], vec_add(a, g)))
          ok = false;
      }
    }
    checks.emplace_back("pf-witnesses-recompute", ok);
  }

  if (command == "glue" && certs.contains("d_in_s1")) {
    SemigroupFile f1 = load_semigroup_file(files.at(0));
    SemigroupFile f2 = load_semigroup_file(files.at(1));
    IntVec d = json_to_vec(payload["d"]);
    bool ok = witness_sums_to(*f1.generators, certs["d_in_s1"]["witness"], d) &&
              witness_sums_to(*f2.generators, certs["d_in_s2"]["witness"], d);
    checks.emplace_back("gluing-membership-witnesses", ok);
  }

  if (command == "frobenius" && payload.contains("elements")) {
    SemigroupFile f = load_semigroup_file(files.at(0));
    AffineSemigroup s = f.semigroup();
    Int nmax = envelope["params"].contains("nmax")
                   ? json_to_int(envelope["params"]["nmax"])
                   : Int(1024);
    std::vector<IntVec> gaps = gap_set(s, nmax);
    bool ok = true;
    for (const Json& e : payload["elements"]) {
      FrobeniusCert c{json_to_vec(e["f"]), json_to_ratvec(e["w"])};
      if (!revalidate(s, c, gaps)) ok = false;
    }
    checks.emplace_back("frobenius-weights-revalidate", ok);
  }

  if (command == "gaps" && envelope["status"] == "ok") {
    SemigroupFile f = load_semigroup_file(files.at(0));
    AffineSemigroup s = f.semigroup();
    bool ok = true;
    for (const Json& g : payload["gaps"]) {
      IntVec h = json_to_vec(g);
      if (s.contains(h) || !s.cone().contains(h)) ok = false;
    }
    checks.emplace_back("gaps-are-nonmember-cone-points", ok);
  }

  if (command == "apery" && payload.contains("elements")) {
    SemigroupFile f = load_semigroup_file(files.at(0));
    AffineSemigroup s = f.semigroup();
    IntVec b = json_to_vec(payload["base"]);
    bool restricted = payload["variant"] == "restricted";
    bool ok = true;
    for (const Json& e : payload["elements"]) {
      IntVec a = json_to_vec(e);
      if (!s.contains(a)) ok = false;
      IntVec diff = vec_sub(a, b);
      if (s.contains(diff)) ok = false;
      if (restricted && !s.cone().contains(diff)) ok = false;
    }
    checks.emplace_back("apery-elements-satisfy-definition", ok);
  }

  if (command == "irreducible" && payload.contains("witness_a1")) {
    SemigroupFile f = load_semigroup_file(files.at(0));
    AffineSemigroup s = f.semigroup();
    AffineSemigroup t1 = adjoin_special_gap(s, json_to_vec(payload["witness_a1"]));
    AffineSemigroup t2 = adjoin_special_gap(s, json_to_vec(payload["witness_a2"]));
    bool ok = true;
    BoxIter it(json_to_vec(payload["verify_box"]));
    IntVec x;
    while (it.next(x)) {
      if ((t1.contains(x) && t2.contains(x)) != s.contains(x)) ok = false;
    }
    checks.emplace_back("irreducibility-witness-intersection", ok);
  }
}

int run_verify(const std::string& envelope_path, bool timing) {
  Json envelope = Json::parse(read_file(envelope_path));
  const std::string command = envelope.at("command").get<std::string>();
  std::vector<std::string> files;
  if (envelope.contains("input"))
    files.push_back(envelope["input"]["path"].get<std::string>());
  else
    for (const Json& in : envelope["inputs"])
      files.push_back(in["path"].get<std::string>());

  std::vector<std::pair<std::string, bool>> checks;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const Json& in = envelope.contains("input") ? envelope["input"]
                                                : envelope["inputs"][i];
    std::string digest = "fnv1a-64:" + fnv1a_digest(read_file(files[i]));
    checks.emplace_back("input-digest", digest == in["digest"].get<std::string>());
  }

  bool same = false;
  try {
    CommandResult r = dispatch(command, envelope["params"], files);
    same = Json(r.payload) == envelope["payload"] &&
           Json(r.certificates) == envelope["certificates"] &&
           r.status == envelope["status"].get<std::string>();
  } catch (const error&) {
    same = envelope["status"] == "error";
  }
  checks.emplace_back("recomputation-matches", same);

  recheck_certificates(command, envelope, files, checks);

  Json out;
  out["command"] = "verify";
  out["target"] = envelope_path;
  bool all_ok = true;
  Json list = Json::array();
  for (auto& [name, ok] : checks) {
    list.push_back(Json{{"check", name}, {"ok", ok}});
    all_ok = all_ok && ok;
  }
  out["checks"] = std::move(list);
  out["status"] = all_ok ? "ok" : "error";
  if (timing) out["timing_ms"] = 0;
  std::cout << out.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with finitely generated submonoids of N^d"};
  app.require_subcommand(1);

  std::string format = "json";
  bool timing = false;
  app.add_option("--format", format, "output format")->capture_default_str();
  app.add_flag("--timing", timing, "include wall-clock timing in the output");

  std::string file, file2, base, box, d_str, pf1, pf2, lambda, order;
  unsigned long long nmax = 1024;
  std::string variant = "restricted";

  auto add_nmax = [&](CLI::App* sub) {
    sub->add_option("--nmax", nmax, "saturation bound")->capture_default_str();
  };
  auto add_box = [&](CLI::App* sub) {
    sub->add_option("--box", box, "comma-separated nonnegative search box");
  };

  CLI::App* info = app.add_subcommand("info", "generators, cone, group data");
  info->add_option("file", file)->required();

  CLI::App* gaps = app.add_subcommand("gaps", "decide gap-set finiteness and enumerate");
  gaps->add_option("file", file)->required();
  add_nmax(gaps);

  CLI::App* pf = app.add_subcommand("pf", "pseudo-Frobenius elements");
  pf->add_option("file", file)->required();
  add_nmax(pf);
  add_box(pf);

  CLI::App* frob = app.add_subcommand("frobenius", "Frobenius elements with weight certificates");
  frob->add_option("file", file)->required();
  add_nmax(frob);
  frob->add_option("--order", order, "lex|grlex|grevlex: also report the order maximum of the gap set");

  CLI::App* apery_cmd = app.add_subcommand("apery", "Apery set relative to a base");
  apery_cmd->add_option("file", file)->required();
  apery_cmd->add_option("--base", base, "comma-separated base vector")->required();
  apery_cmd->add_option("--variant", variant, "restricted|classical")
      ->capture_default_str();
  add_box(apery_cmd);
  add_nmax(apery_cmd);

  CLI::App* mpd = app.add_subcommand("mpd", "maximal projective dimension verdict");
  mpd->add_option("file", file)->required();
  add_nmax(mpd);
  add_box(mpd);

  CLI::App* bound = app.add_subcommand("bound", "length bound for pseudo-Frobenius witnesses");
  bound->add_option("file", file)->required();

  CLI::App* glue = app.add_subcommand("glue", "gluing certificate for two semigroups");
  glue->add_option("file1", file)->required();
  glue->add_option("file2", file2)->required();
  glue->add_option("--d", d_str, "gluing vector")->required();
  glue->add_option("--pf1", pf1, "pseudo-Frobenius element of S1");
  glue->add_option("--pf2", pf2, "pseudo-Frobenius element of S2");

  CLI::App* irr = app.add_subcommand("irreducible", "irreducibility verdict");
  irr->add_option("file", file)->required();
  add_nmax(irr);

  CLI::App* pi = app.add_subcommand("pi", "principal-ideal monoid operations");
  pi->require_subcommand(1);
  CLI::App* pi_check = pi->add_subcommand("check", "principal-ideal test");
  pi_check->add_option("file", file)->required();
  CLI::App* pi_dec = pi->add_subcommand("decompose", "offset and submonoid");
  pi_dec->add_option("file", file)->required();
  CLI::App* pi_pf = pi->add_subcommand("pf", "pseudo-Frobenius set");
  pi_pf->add_option("file", file)->required();
  add_box(pi_pf);
  CLI::App* pi_gen = pi->add_subcommand("generators", "minimal generating system");
  pi_gen->add_option("file", file)->required();
  add_box(pi_gen);
  CLI::App* pi_lim = pi->add_subcommand("limit", "finitely generated piece of the direct limit");
  pi_lim->add_option("file", file)->required();
  pi_lim->add_option("--lambda", lambda, "semicolon-separated vectors from m + PF")
      ->required();
  add_nmax(pi_lim);

  CLI::App* verify = app.add_subcommand("verify", "re-validate an emitted envelope");
  verify->add_option("envelope", file)->required();

  CLI11_PARSE(app, argc, argv);

  if (format != "json") {
    std::cerr << "unsupported format: " << format << "\n";
    return 1;
  }

  try {
    Json params;
    params["nmax"] = Json(nmax);
    if (!box.empty()) params["box"] = vec_to_json(parse_int_vec(box));

    if (*info) return emit_envelope("info", params, {file}, timing);
    if (*gaps) return emit_envelope("gaps", params, {file}, timing);
    if (*pf) return emit_envelope("pf", params, {file}, timing);
    if (*frob) {
      if (!order.empty()) {
        if (order != "lex" && order != "grlex" && order != "grevlex")
          throw input_error("unknown order: " + order);
        params["order"] = order;
      }
      return emit_envelope("frobenius", params, {file}, timing);
    }
    if (*apery_cmd) {
      if (variant != "restricted" && variant != "classical")
        throw input_error("unknown variant: " + variant);
      params["base"] = vec_to_json(parse_int_vec(base));
      params["variant"] = variant;
      return emit_envelope("apery", params, {file}, timing);
    }
    if (*mpd) return emit_envelope("mpd", params, {file}, timing);
    if (*bound) return emit_envelope("bound", params, {file}, timing);
    if (*glue) {
      params["d"] = vec_to_json(parse_int_vec(d_str));
      if (!pf1.empty()) params["pf1"] = vec_to_json(parse_int_vec(pf1));
      if (!pf2.empty()) params["pf2"] = vec_to_json(parse_int_vec(pf2));
      return emit_envelope("glue", params, {file, file2}, timing);
    }
    if (*irr) return emit_envelope("irreducible", params, {file}, timing);
    if (*pi) {
      if (*pi_check) return emit_envelope("pi-check", params, {file}, timing);
      if (*pi_dec) return emit_envelope("pi-decompose", params, {file}, timing);
      if (*pi_pf) return emit_envelope("pi-pf", params, {file}, timing);
      if (*pi_gen) return emit_envelope("pi-generators", params, {file}, timing);
      if (*pi_lim) {
        params["lambda"] = vecs_to_json(parse_vec_list(lambda));
        return emit_envelope("pi-limit", params, {file}, timing);
      }
    }
    if (*verify) return run_verify(file, timing);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    Json envelope;
    envelope["status"] = "error";
    envelope["error"] = {{"kind", "input"}, {"message", e.what()}};
    std::cout << envelope.dump(2) << "\n";
    return 1;
  }
  return 1;
}
