#include "eqkt/restriction.hpp"

#include <chrono>
#include <optional>
#include <string>

namespace eqkt {

namespace {

void set_block(IntMatrix& m, std::size_t block_row, std::size_t block_col, const IntMatrix& block) {
  const std::size_t r0 = block_row * block.rows();
  const std::size_t c0 = block_col * block.cols();
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) m(r0 + i, c0 + j) += block(i, j);
}

IntMatrix zero_like(const IntMatrix& m) { return IntMatrix(m.rows(), m.cols()); }

}  // namespace

json RestrictionContext::to_json() const {
  return {{"n", n}, {"m", m}, {"k", k}, {"ell", ell}, {"d", d}, {"d_sub", d_sub}, {"j", j}, {"a_exponent", a_exponent}};
}

RestrictionContext make_restriction_context(long n, long m, long k, long ell) {
  if (m < 1 || n < 1 || n % m != 0)
    throw NotASubgroup("Z_" + std::to_string(m) + " is not a subgroup of Z_" + std::to_string(n));
  const PointPair pair(n, k, ell);
  RestrictionContext ctx{};
  ctx.n = n;
  ctx.m = m;
  ctx.k = k;
  ctx.ell = ell;
  ctx.d = pair.d();
  ctx.d_sub = gcd_of(m, k);
  const long num = n * ctx.d_sub;
  const long den = m * ctx.d;
  if (num % den != 0) throw InvalidPair("orbit count n*d_sub/(m*d) is not an integer");
  ctx.j = num / den;
  ctx.a_exponent = reduce_mod(pair.twist_exponent(), ctx.d_sub);
  return ctx;
}

ModuleMap rest_k0_closed(const RestrictionContext& ctx) {
  const auto src = compute_kgroups_closed(ctx.source());
  const auto tgt = compute_kgroups_closed(ctx.target());
  const IntMatrix image =
      restriction_ring_map(static_cast<std::size_t>(ctx.d), static_cast<std::size_t>(ctx.d_sub)) * src.k0_basis;
  auto coords = solve_integer(tgt.k0_basis, image);
  if (!coords) throw IllFormedMap("restricted invariants leave the target invariant submodule");
  return ModuleMap(src.k0, tgt.k0, std::move(*coords));
}

ModuleMap rest_k1_closed(const RestrictionContext& ctx) {
  const auto d_sub = static_cast<std::size_t>(ctx.d_sub);
  const auto src = compute_kgroups_closed(ctx.source());
  const auto tgt = compute_kgroups_closed(ctx.target());
  ModuleMap f(src.k1, tgt.k1,
              geometric_action_sum(d_sub, ctx.a_exponent, ctx.j) *
                  restriction_ring_map(static_cast<std::size_t>(ctx.d), d_sub));
  f.certify();
  return f;
}

IntMatrix phi_matrix(const RestrictionContext& ctx) {
  const auto d_sub = static_cast<std::size_t>(ctx.d_sub);
  const auto j = static_cast<std::size_t>(ctx.j);
  const IntMatrix id = IntMatrix::identity(d_sub);
  const IntMatrix minus_a = zero_like(id) - char_action_matrix(d_sub, ctx.a_exponent);
  const IntMatrix minus_id = zero_like(id) - id;
  IntMatrix phi(2 * j * d_sub, 2 * j * d_sub);
  for (std::size_t i = 0; i < j; ++i) {
    set_block(phi, i, i, id);              // p_i
    set_block(phi, i, j + i, minus_a);     // - a q_i
    set_block(phi, j + i, i, id);          // p_i
    set_block(phi, j + i, j + (i + 1) % j, minus_id);  // - q_(i+1), wrapping to q_1
  }
  return phi;
}

IntMatrix vertical_matrix(const RestrictionContext& ctx) {
  const auto d_sub = static_cast<std::size_t>(ctx.d_sub);
  const auto j = static_cast<std::size_t>(ctx.j);
  const IntMatrix r = restriction_ring_map(static_cast<std::size_t>(ctx.d), d_sub);
  IntMatrix v(2 * j * d_sub, 2 * r.cols());
  for (std::size_t i = 0; i < j; ++i) {
    set_block(v, i, 0, r);
    set_block(v, j + i, 1, r);
  }
  return v;
}

PhiIdentifications phi_identifications(const RestrictionContext& ctx) {
  const auto d_sub = static_cast<std::size_t>(ctx.d_sub);
  const auto j = static_cast<std::size_t>(ctx.j);
  const auto tgt = compute_kgroups_closed(ctx.target());

  IntMatrix phi = phi_matrix(ctx);
  IntMatrix kernel = kernel_basis(phi);
  auto first = solve_integer(tgt.k0_basis, kernel.row_block(0, d_sub));
  if (!first) throw IllFormedMap("first components of ker(phi) are not invariant");
  ModuleMap ker_iso(PresentedModule::free(kernel.cols()), tgt.k0, std::move(*first));

  // [(x_1..x_j, y_1..y_j)] -> [x_1 + a x_j + ... + a^(j-1) x_2 - (a y_j + ... + a^j y_1)]
  const IntMatrix a = char_action_matrix(d_sub, ctx.a_exponent);
  std::vector<IntMatrix> powers{IntMatrix::identity(d_sub)};
  for (std::size_t t = 1; t <= j; ++t) powers.push_back(a * powers.back());
  IntMatrix weights(d_sub, 2 * j * d_sub);
  set_block(weights, 0, 0, powers[0]);
  for (std::size_t i = 2; i <= j; ++i) set_block(weights, 0, i - 1, powers[j + 1 - i]);
  for (std::size_t i = 1; i <= j; ++i) set_block(weights, 0, j + i - 1, zero_like(a) - powers[j + 1 - i]);
  const PresentedModule coker_phi = cokernel(phi);
  ModuleMap coker_iso(coker_phi, tgt.k1, std::move(weights));

  IntMatrix embed(2 * j * d_sub, d_sub);
  set_block(embed, 0, 0, IntMatrix::identity(d_sub));
  ModuleMap coker_inverse(tgt.k1, coker_phi, std::move(embed));

  return {std::move(phi), std::move(kernel), std::move(ker_iso), std::move(coker_iso), std::move(coker_inverse)};
}

namespace {

template <class F>
bool guarded(F&& f, json& witness) {
  try {
    return f();
  } catch (const std::exception& e) {
    witness["error"] = e.what();
    return false;
  }
}

}  // namespace

VerificationReport verify_restriction_agreement(const RestrictionContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.family = "restriction";
  report.subject = ctx.to_json();
  report.sort_key = {ctx.n, ctx.m, ctx.k, ctx.ell};

  const PointPair source = ctx.source();
  const auto src = compute_kgroups_closed(source);
  const IntMatrix mv = mv_matrix(source);
  const IntMatrix vert = vertical_matrix(ctx);

  std::optional<ModuleMap> rest0;
  std::optional<ModuleMap> rest1;
  {
    json w;
    const bool ok = guarded([&] { rest0 = rest_k0_closed(ctx); return true; }, w);
    if (ok) w["matrix"] = to_json(rest0->matrix());
    report.add_check("rest_k0_well_defined", ok, w);
  }
  {
    json w;
    const bool ok = guarded([&] { rest1 = rest_k1_closed(ctx); return rest1->is_well_defined(); }, w);
    if (rest1) w["matrix"] = to_json(rest1->matrix());
    report.add_check("rest_k1_well_defined", ok, w);
  }

  const IntMatrix phi = phi_matrix(ctx);
  report.add_check("ladder_commutes", phi * vert == vert * mv,
                   {{"phi_rows", phi.rows()}, {"vertical_cols", vert.cols()}});

  std::optional<PhiIdentifications> ids;
  {
    json w;
    const bool ok = guarded([&] { ids = phi_identifications(ctx); return true; }, w);
    if (!ok) {
      report.add_check("ker_iso_isomorphism", false, w);
      report.add_check("coker_iso_isomorphism", false, w);
      report.add_check("coker_inverse_two_sided", false, w);
      report.add_check("k0_transport_agrees", false, w);
      report.add_check("k1_transport_agrees", false, w);
      report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      return report;
    }
  }

  {
    json w;
    const bool ok = guarded([&] {
      const auto a = induced_map_analysis(ids->ker_iso);
      w["kernel_rank"] = ids->kernel_basis.cols();
      return a.is_injective && a.is_surjective;
    }, w);
    report.add_check("ker_iso_isomorphism", ok, w);
  }
  {
    json w;
    const bool ok = guarded([&] {
      const auto a = induced_map_analysis(ids->coker_iso);
      w["coker_phi"] = module_to_json(ids->coker_iso.source());
      return a.is_injective && a.is_surjective;
    }, w);
    report.add_check("coker_iso_isomorphism", ok, w);
  }
  {
    json w;
    const bool ok = guarded([&] {
      ids->coker_inverse.certify();
      const bool left = maps_equal(compose(ids->coker_iso, ids->coker_inverse), identity_map(ids->coker_iso.target()));
      const bool right = maps_equal(compose(ids->coker_inverse, ids->coker_iso), identity_map(ids->coker_iso.source()));
      w["iso_after_inverse"] = left;
      w["inverse_after_iso"] = right;
      return left && right;
    }, w);
    report.add_check("coker_inverse_two_sided", ok, w);
  }

  // K^0: p -> (p, p) in ker(mv), down the ladder, then into ker(phi) coordinates.
  {
    json w;
    const bool ok = guarded([&] {
      if (!rest0) return false;
      const IntMatrix lifts = vstack(src.k0_basis, src.k0_basis);
      if (!(mv * lifts).is_zero()) {
        w["reason"] = "diagonal lift is not in ker(mv)";
        return false;
      }
      const IntMatrix down = vert * lifts;
      if (!(phi * down).is_zero()) {
        w["reason"] = "ladder image is not in ker(phi)";
        return false;
      }
      auto coords = solve_integer(ids->kernel_basis, down);
      if (!coords) return false;
      const IntMatrix transported = ids->ker_iso.matrix() * *coords;
      w["transported"] = to_json(transported);
      return transported == rest0->matrix();
    }, w);
    report.add_check("k0_transport_agrees", ok, w);
  }

  // K^1: [p] -> [(p, 0)] in coker(mv), down the ladder, then through coker_iso.
  {
    json w;
    const bool ok = guarded([&] {
      if (!rest1) return false;
      const auto d = static_cast<std::size_t>(ctx.d);
      const ModuleMap lift(src.k1, cokernel(mv), vstack(IntMatrix::identity(d), IntMatrix(d, d)));
      lift.certify();
      const ModuleMap down(cokernel(mv), ids->coker_iso.source(), vert);
      down.certify();
      const ModuleMap transported = compose(ids->coker_iso, compose(down, lift));
      w["transported"] = to_json(transported.matrix());
      return maps_equal(transported, *rest1);
    }, w);
    report.add_check("k1_transport_agrees", ok, w);
  }

  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace eqkt
