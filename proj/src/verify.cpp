#include "frob/verify.hpp"

#include <algorithm>

#include "frob/ct.hpp"
#include "frob/errors.hpp"
#include "frob/fx.hpp"
#include "frob/nr_engine.hpp"

namespace frob {

namespace {

void append(std::string& into, const std::string& label, const std::vector<std::string>& lines) {
  for (const auto& l : lines) {
    if (!into.empty()) into += "; ";
    into += label + " " + l;
  }
}

}  // namespace

std::vector<FamilySpec> family_grid(FamilyTag tag, const std::vector<GridAxis>& axes) {
  const auto& info = family_info(tag);
  for (const auto& ax : axes)
    if (std::find(info.params.begin(), info.params.end(), ax.name) == info.params.end())
      throw DomainError("family " + info.name + " has no parameter '" + ax.name + "'");
  auto full = axes;
  for (const auto& p : info.params) {
    const bool given = std::any_of(axes.begin(), axes.end(), [&](const GridAxis& a) { return a.name == p; });
    if (given) continue;
    if (p == "h" || p == "d") full.push_back({p, 1, 1});
    else throw DomainError("family " + info.name + ": grid must give a range for '" + p + "'");
  }
  // Schema order, so output does not depend on how the grid was written.
  std::vector<GridAxis> ordered;
  for (const auto& p : info.params)
    for (const auto& ax : full)
      if (ax.name == p) ordered.push_back(ax);
  std::vector<FamilySpec> out;
  for (auto& pt : grid_points(ordered)) out.push_back(FamilySpec{tag, std::move(pt)});
  return out;
}

InstanceResult verify_instance(const FamilySpec& spec, const VerifyOptions& opts) {
  InstanceResult r;
  r.spec = spec;
  StatBundle closed;
  try {
    closed = evaluate_family(spec, opts.max_mu);
  } catch (const PreconditionError& e) {
    r.detail = e.what();
    return r;
  }
  try {
    const Tuple A(closed.tuple);
    const auto T = compute_nr(A);
    const auto nr = stats_from_nr(T, opts.max_mu);
    append(r.detail, "closed-form vs nr:", compare_bundles(closed, nr));

    if (opts.ct && family_info(spec.tag).has_fx) {
      std::optional<RationalTermSum> fx;
      try {
        fx = fx_family(spec, FxOptions{opts.fx_appendix_guards});
      } catch (const PreconditionError&) {
        // Appendix-only guard; the theorem-level check above still ran.
      }
      if (fx) {
        r.ct_checked = true;
        const auto verdict = fx_equivalence_check(*fx, T);
        if (!verdict.equal) append(r.detail, "f(x):", {verdict.message});
        const auto ct = stats_via_ct(*fx, A.modulus(), opts.max_mu);
        append(r.detail, "ct vs nr:", compare_bundles(ct, nr));
      }
    }
    if (opts.oracle) {
      r.oracle_checked = true;
      const auto o = oracle_stats(A, opts.max_mu, {}, opts.limits);
      append(r.detail, "oracle vs nr:", compare_bundles(o, nr));
      append(r.detail, "oracle vs closed-form:", compare_bundles(o, closed));
    }
    r.outcome = r.detail.empty() ? Outcome::Pass : Outcome::Mismatch;
  } catch (const std::exception& e) {
    r.outcome = Outcome::Error;
    r.detail = e.what();
  }
  return r;
}

VerifyReport verify_specs(const std::vector<FamilySpec>& specs, const VerifyOptions& opts) {
  std::vector<InstanceResult> results(specs.size());
  parallel_for(specs.size(), opts.threads, [&](std::size_t i) { results[i] = verify_instance(specs[i], opts); });
  VerifyReport rep;
  rep.points = specs.size();
  for (auto& r : results) {
    if (r.outcome == Outcome::Skipped) continue;
    ++rep.instances;
    rep.ct_checked += r.ct_checked;
    rep.oracle_checked += r.oracle_checked;
    if (r.outcome == Outcome::Pass) {
      ++rep.passed;
    } else {
      ++rep.failed;
      rep.failures.push_back(std::move(r));
    }
  }
  return rep;
}

VerifyReport verify_family(FamilyTag tag, const std::vector<GridAxis>& axes, const VerifyOptions& opts) {
  return verify_specs(family_grid(tag, axes), opts);
}

std::string describe_failure(const InstanceResult& r) {
  std::string kind = r.outcome == Outcome::Error ? "error" : "formula mismatch";
  std::string tuple;
  try {
    tuple = " tuple " + family_tuple(r.spec).str();
  } catch (const std::exception&) {
  }
  return kind + " at " + r.spec.str() + tuple + ": " + r.detail;
}

}  // namespace frob
