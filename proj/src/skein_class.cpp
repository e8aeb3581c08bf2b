#include <sstream>

#include "skein/invariants.hpp"

namespace skein {

namespace {

long long mod_repr(long long v, long long m) {
  if (m == 0) return v;
  long long r = v % m;
  return r < 0 ? r + m : r;
}

std::string hom_str(const HomClass& h) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < h.size(); ++i) out << (i ? "," : "") << h[i];
  out << ")";
  return out.str();
}

std::string hom2_str(const HomClass& h) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < h.size(); ++i) out << (i ? "," : "") << mod_repr(h[i], 2);
  out << ")";
  return out.str();
}

bool hom2_zero(const HomClass& h) {
  for (auto v : h)
    if (v % 2 != 0) return false;
  return true;
}

long long diagram_writhe(const SurfaceDiagram& d) {
  long long wr = 0;
  for (int v = 0; v < (int)d.vertices.size(); ++v) {
    const auto& vx = d.vertices[v];
    if (vx.rot.empty() || vx.endpoint) continue;
    if (vx.flavor != Flavor::Classical) throw ClassError("writhe needs classical crossings");
    wr += d.vertex_sign(v);
  }
  return wr;
}

int crossing_total(const SurfaceDiagram& d) {
  int n = 0;
  for (int v = 0; v < (int)d.vertices.size(); ++v)
    if (!d.vertices[v].rot.empty() && !d.vertices[v].endpoint) ++n;
  return n;
}

void require_crossingless(const SurfaceDiagram& d, const std::string& tag) {
  if (crossing_total(d) != 0)
    throw ClassError("theory " + tag + " classifies crossingless diagrams only");
}

// lambda action (x, f) -> (x + chi, t^-1 f) quotient; canonical representative.
std::string lambda_pair(const SurfaceDiagram& d, long long rot_lift, Laurent p) {
  std::ostringstream out;
  if (!d.surface.closed()) {
    out << rot_lift << ";" << p.str();
    return out.str();
  }
  int chi = d.surface.chi_bar();
  if (chi > 0) {
    long long k = rot_lift >= 0 ? rot_lift / chi : -(((-rot_lift) + chi - 1) / chi);
    // shift rot into [0, chi): lambda^{-k}
    long long r = rot_lift - k * chi;
    p = p.shifted(k);
    out << r << ";" << p.str();
    return out.str();
  }
  // chi == 0 (torus): rot fixed, p up to cyclic shift.
  out << rot_lift << ";" << p.cyclic_normal_form().str();
  return out.str();
}

// involution (x, y) -> (x + y, -y) on Z2 x (Z or Z4)
std::string q_pair(const SurfaceDiagram& d, long long rho, long long wr_odd, long long y_mod) {
  auto norm = [&](long long x, long long y) {
    x = mod_repr(x, 2);
    if (y_mod > 0) y = mod_repr(y, y_mod);
    std::ostringstream o;
    o << x << "," << y;
    return o.str();
  };
  std::string s1 = norm(rho, wr_odd);
  if (!d.surface.closed()) return s1;
  std::string s2 = norm(rho + wr_odd, y_mod > 0 ? mod_repr(-wr_odd, y_mod) : -wr_odd);
  return std::min(s1, s2);
}

} // namespace

std::vector<std::string> skein_theory_tags() {
  return {"H2+",          "H2o+",          "H2o+,O2",       "H2o+,O2,O3",   "H2+,O2,O3",
          "H2o+,O1,O2,O3", "H2+,O1,O2,O3",  "H2o+,O2,2Oinf", "H2+,O2,2Oinf", "H2",
          "H2o",          "H2o,O2",        "H2o,O2,O3",     "H2,O2,O3",     "H2o,O1,O2,O3",
          "H2o,O2,2Oinf", "H2,O2,2Oinf"};
}

SkeinClass skein_class(const SurfaceDiagram& d, const std::string& tag) {
  SkeinClass sc;
  sc.theory = tag;
  std::ostringstream out;
  HomClass cls = d.total_class();

  if (tag == "H2+") {
    require_crossingless(d, tag);
    out << hom_str(cls);
  } else if (tag == "H2o+") {
    require_crossingless(d, tag);
    RotResult r = rot(d);
    out << hom_str(cls) << ";" << (d.surface.chi_bar() > 0 ? r.rot : r.rot_lift);
  } else if (tag == "H2o+,O2") {
    RotResult r = rot(d);
    IndexPoly p = index_polynomial(d);
    out << hom_str(cls) << ";" << lambda_pair(d, r.rot_lift, p.p);
  } else if (tag == "H2o+,O2,O3") {
    RotResult r = rot(d);
    out << hom_str(cls) << ";" << (d.surface.chi_bar() > 0 ? r.rot : r.rot_lift) << ";"
        << diagram_writhe(d);
  } else if (tag == "H2+,O2,O3") {
    out << hom_str(cls) << ";" << diagram_writhe(d);
  } else if (tag == "H2o+,O1,O2,O3") {
    RotResult r = rot(d);
    out << hom_str(cls) << ";" << mod_repr(r.rot_lift + diagram_writhe(d), 2);
  } else if (tag == "H2+,O1,O2,O3") {
    out << hom_str(cls);
  } else if (tag == "H2o+,O2,2Oinf") {
    RotResult r = rot(d);
    IndexPoly p = index_polynomial(d);
    long long wr = diagram_writhe(d);
    out << hom_str(cls) << ";" << lambda_pair(d, r.rot_lift, p.p.mod2()) << ";"
        << (wr >= 0 ? wr / 2 : (wr - 1) / 2);
  } else if (tag == "H2+,O2,2Oinf") {
    IndexPoly p = index_polynomial(d);
    long long wr = diagram_writhe(d);
    out << hom_str(cls) << ";" << p.p.mod2().cyclic_normal_form().str() << ";"
        << (wr >= 0 ? wr / 2 : (wr - 1) / 2);
  } else if (tag == "H2") {
    require_crossingless(d, tag);
    out << hom2_str(cls);
  } else if (tag == "H2o") {
    require_crossingless(d, tag);
    UnorProfile u = unoriented_profile(d);
    out << hom2_str(cls) << ";" << u.rho0;
  } else if (tag == "H2o,O2") {
    UnorProfile u = unoriented_profile(d);
    out << hom2_str(cls) << ";";
    if (hom2_zero(cls)) out << q_pair(d, u.rho, u.wr_odd, 0);
    else out << mod_repr(2 * u.rho + u.wr_odd, 4);
  } else if (tag == "H2o,O2,O3") {
    UnorProfile u = unoriented_profile(d);
    out << hom2_str(cls) << ";" << mod_repr(2 * u.rho + u.wr_odd, 4);
  } else if (tag == "H2,O2,O3") {
    out << hom2_str(cls) << ";" << crossing_total(d) % 2;
  } else if (tag == "H2o,O1,O2,O3" || tag == "H2,O1,O2,O3") {
    out << hom2_str(cls);
  } else if (tag == "H2o,O2,2Oinf") {
    UnorProfile u = unoriented_profile(d);
    out << hom2_str(cls) << ";";
    if (hom2_zero(cls)) out << q_pair(d, u.rho, u.wr_odd, 4);
    else out << mod_repr(2 * u.rho + u.wr_odd, 4);
  } else if (tag == "H2,O2,2Oinf") {
    UnorProfile u = unoriented_profile(d);
    out << hom2_str(cls) << ";";
    if (hom2_zero(cls)) {
      long long w = mod_repr(u.wr_odd, 4);
      out << std::min(w, mod_repr(-u.wr_odd, 4));
    } else {
      out << crossing_total(d) % 2;
    }
  } else {
    throw ClassError("unknown skein theory tag: " + tag);
  }
  sc.payload = out.str();
  return sc;
}

} // namespace skein
