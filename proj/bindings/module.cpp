#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "planarvac/dirac.hpp"
#include "planarvac/errors.hpp"
#include "planarvac/massive.hpp"
#include "planarvac/specfun.hpp"
#include "planarvac/subcritical.hpp"
#include "planarvac/supercritical.hpp"
#include "planarvac/version.hpp"

namespace py = pybind11;
namespace pv = planarvac;

namespace {

pv::SeriesControl make_ctl(int l_max, double tail_tol) {
  pv::SeriesControl ctl;
  ctl.l_max = l_max;
  ctl.tail_tol = tail_tol;
  return ctl;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Vacuum polarization around a planar Coulomb center";
  m.attr("__version__") = pv::kVersion;

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const pv::ValidationError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const pv::DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const pv::PoleError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const pv::NoRootError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const pv::Error& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  py::enum_<pv::Regime>(m, "Regime")
      .value("Subcritical", pv::Regime::Subcritical)
      .value("Supercritical", pv::Regime::Supercritical);
  py::enum_<pv::LevelKind>(m, "LevelKind")
      .value("Bound", pv::LevelKind::Bound)
      .value("Resonance", pv::LevelKind::Resonance);
  py::enum_<pv::MassiveRegime>(m, "MassiveRegime")
      .value("Exact", pv::MassiveRegime::Exact)
      .value("SmallMr", pv::MassiveRegime::SmallMr)
      .value("LargeMr", pv::MassiveRegime::LargeMr);
  py::enum_<pv::LargeRPrefactor>(m, "LargeRPrefactor")
      .value("Derived", pv::LargeRPrefactor::Derived)
      .value("TwoSqrtPi", pv::LargeRPrefactor::TwoSqrtPi);

  py::class_<pv::CoulombSystem>(m, "CoulombSystem")
      .def(py::init<double, double, double, double, double>(), py::arg("a"),
           py::arg("mu_flux") = 0.0, py::arg("m") = 0.0,
           py::arg("theta") = 0.0, py::arg("E0") = 1.0)
      .def_readonly("a", &pv::CoulombSystem::a)
      .def_readonly("mu_flux", &pv::CoulombSystem::mu_flux)
      .def_readonly("m", &pv::CoulombSystem::m)
      .def_readonly("theta", &pv::CoulombSystem::theta)
      .def_readonly("E0", &pv::CoulombSystem::E0)
      .def("__repr__", [](const pv::CoulombSystem& s) {
        return "CoulombSystem(a=" + std::to_string(s.a) +
               ", mu_flux=" + std::to_string(s.mu_flux) +
               ", m=" + std::to_string(s.m) +
               ", theta=" + std::to_string(s.theta) +
               ", E0=" + std::to_string(s.E0) + ")";
      });

  py::class_<pv::Channel>(m, "Channel")
      .def_readonly("l", &pv::Channel::l)
      .def_readonly("s", &pv::Channel::s)
      .def_readonly("nu", &pv::Channel::nu)
      .def_readonly("nu_signed", &pv::Channel::nu_signed)
      .def_readonly("gamma_sq", &pv::Channel::gamma_sq)
      .def_readonly("regime", &pv::Channel::regime)
      .def("gamma", &pv::Channel::gamma)
      .def("sigma", &pv::Channel::sigma);

  py::class_<pv::RadialDoublet>(m, "RadialDoublet")
      .def_readonly("f", &pv::RadialDoublet::f)
      .def_readonly("g", &pv::RadialDoublet::g)
      .def_readonly("r", &pv::RadialDoublet::r);

  py::class_<pv::SpectrumLevel>(m, "SpectrumLevel")
      .def_readonly("k", &pv::SpectrumLevel::k)
      .def_readonly("l", &pv::SpectrumLevel::l)
      .def_readonly("s", &pv::SpectrumLevel::s)
      .def_readonly("energy_re", &pv::SpectrumLevel::energy_re)
      .def_readonly("width", &pv::SpectrumLevel::width)
      .def_readonly("kind", &pv::SpectrumLevel::kind);

  py::class_<pv::InducedCharge>(m, "InducedCharge")
      .def_readonly("q1", &pv::InducedCharge::q1)
      .def_readonly("qr", &pv::InducedCharge::qr)
      .def_readonly("total", &pv::InducedCharge::total)
      .def_readonly("tail_estimate", &pv::InducedCharge::tail_estimate)
      .def_readonly("l_used", &pv::InducedCharge::l_used);

  py::class_<pv::ChannelSigma>(m, "ChannelSigma")
      .def_readonly("l", &pv::ChannelSigma::l)
      .def_readonly("s", &pv::ChannelSigma::s)
      .def_readonly("sigma", &pv::ChannelSigma::sigma);

  py::class_<pv::SupercriticalDensityPoint>(m, "SupercriticalDensityPoint")
      .def_readonly("r", &pv::SupercriticalDensityPoint::r)
      .def_readonly("density_re", &pv::SupercriticalDensityPoint::density_re)
      .def_readonly("density_im", &pv::SupercriticalDensityPoint::density_im)
      .def_readonly("channels", &pv::SupercriticalDensityPoint::channels);

  py::class_<pv::RGState>(m, "RGState")
      .def_readonly("g", &pv::RGState::g)
      .def_readonly("log_r", &pv::RGState::log_r);

  py::class_<pv::RGFlowResult>(m, "RGFlowResult")
      .def_readonly("states", &pv::RGFlowResult::states)
      .def_readonly("r_star", &pv::RGFlowResult::r_star);

  py::class_<pv::MassiveChargePoint>(m, "MassiveChargePoint")
      .def_readonly("r", &pv::MassiveChargePoint::r)
      .def_readonly("q_m", &pv::MassiveChargePoint::q_m)
      .def_readonly("regime", &pv::MassiveChargePoint::regime);

  m.def("ln_gamma", &pv::ln_gamma, py::arg("z"),
        "Principal-branch log Gamma");
  m.def("digamma", &pv::digamma, py::arg("z"));
  m.def("trigamma", &pv::trigamma, py::arg("x"));
  m.def("polygamma_real", &pv::polygamma_real, py::arg("order"),
        py::arg("x"));
  m.def("whittaker_M", &pv::whittaker_M, py::arg("kappa"), py::arg("mu"),
        py::arg("x"));
  m.def("whittaker_W", &pv::whittaker_W, py::arg("kappa"), py::arg("mu"),
        py::arg("x"));
  m.def("bessel_I", &pv::bessel_I, py::arg("order"), py::arg("x"));
  m.def("bessel_I_prime", &pv::bessel_I_prime, py::arg("order"),
        py::arg("x"));

  m.def("make_channel", &pv::make_channel, py::arg("sys"), py::arg("l"),
        py::arg("s"));
  m.def("regular_solution", &pv::regular_solution, py::arg("sys"),
        py::arg("ch"), py::arg("E"), py::arg("r"));
  m.def("irregular_solution", &pv::irregular_solution, py::arg("sys"),
        py::arg("ch"), py::arg("E"), py::arg("r"));
  m.def("wronskian", &pv::wronskian, py::arg("sys"), py::arg("ch"),
        py::arg("E"));
  m.def("bound_spectrum", &pv::bound_spectrum, py::arg("sys"), py::arg("k"),
        py::arg("l"));
  m.def("tau_massless", &pv::tau_massless, py::arg("a"));
  m.def("resonance_spectrum_massless", &pv::resonance_spectrum_massless,
        py::arg("sys"), py::arg("k"));
  m.def("solve_dived_resonance", &pv::solve_dived_resonance, py::arg("sys"));
  m.def("dived_resonance_residual", &pv::dived_resonance_residual,
        py::arg("sys"), py::arg("epsilon"));

  m.def(
      "q1",
      [](double a, double alpha, int l_max, double tail_tol) {
        return pv::q1(a, alpha, make_ctl(l_max, tail_tol));
      },
      py::arg("a"), py::arg("alpha") = 0.0, py::arg("l_max") = 2000,
      py::arg("tail_tol") = 1e-10,
      "Linear-in-a induced charge from the channel series");
  m.def(
      "qr",
      [](double a, double alpha, int l_max, double tail_tol) {
        return pv::qr(a, alpha, make_ctl(l_max, tail_tol));
      },
      py::arg("a"), py::arg("alpha") = 0.0, py::arg("l_max") = 2000,
      py::arg("tail_tol") = 1e-10,
      "Remainder beyond the linear induced charge");
  m.def(
      "q_ind",
      [](double a, double alpha, int l_max, double tail_tol) {
        return pv::q_ind(a, alpha, make_ctl(l_max, tail_tol));
      },
      py::arg("a"), py::arg("alpha") = 0.0, py::arg("l_max") = 2000,
      py::arg("tail_tol") = 1e-10,
      "Total induced vacuum charge, massless subcritical case");
  m.def(
      "effective_coupling_subcritical",
      [](double a_bare, double e0_sq, int l_max, double tail_tol) {
        return pv::effective_coupling_subcritical(a_bare, e0_sq,
                                                  make_ctl(l_max, tail_tol));
      },
      py::arg("a_bare"), py::arg("e0_sq"), py::arg("l_max") = 2000,
      py::arg("tail_tol") = 1e-10,
      "Self-consistent screened coupling from the induced charge");

  m.def("sigma0", &pv::sigma0, py::arg("a"));
  m.def("supercritical_channels", &pv::supercritical_channels,
        py::arg("sys"));
  m.def("omega_minus", &pv::omega_minus, py::arg("sys"), py::arg("ch"),
        py::arg("r"));
  m.def("density_general", &pv::density_general, py::arg("sys"),
        py::arg("r"), "Induced density summed over supercritical channels");
  m.def("density_window", &pv::density_window, py::arg("sys"), py::arg("r"),
        "Single-channel induced density for 1/2 < a < 3/2");
  m.def("window_phase", &pv::window_phase, py::arg("a"));
  m.def("annulus_charge", &pv::annulus_charge, py::arg("a"), py::arg("r0"),
        py::arg("r"));
  m.def("rg_flow", &pv::rg_flow, py::arg("g0"), py::arg("e0_sq"),
        py::arg("r0"), py::arg("r_grid"),
        "Coupling flow on a radial grid; r_star set where g reaches 1/2");

  m.def("polarization_operator", &pv::polarization_operator, py::arg("q_sq"),
        py::arg("m"));
  m.def("induced_charge_momentum", &pv::induced_charge_momentum,
        py::arg("a"), py::arg("q_abs"), py::arg("m"));
  m.def("q_m_coordinate", &pv::q_m_coordinate, py::arg("a"), py::arg("m"),
        py::arg("r"), py::arg("quad_tol") = 1e-10);
  m.def("q_m_small_r", &pv::q_m_small_r, py::arg("a"), py::arg("m"),
        py::arg("r"), py::arg("c_fit"));
  m.def("q_m_large_r", &pv::q_m_large_r, py::arg("a"), py::arg("m"),
        py::arg("r"),
        py::arg("prefactor") = pv::LargeRPrefactor::Derived);
  m.def("fit_small_r_coefficient", &pv::fit_small_r_coefficient,
        py::arg("m"), py::arg("quad_tol") = 1e-10);
  m.def("real_polarization_density", &pv::real_polarization_density,
        py::arg("a_cr"), py::arg("m"), py::arg("epsilon0"), py::arg("r"));
  m.def("resonance_width", &pv::resonance_width, py::arg("a"), py::arg("m"),
        py::arg("epsilon"));
  m.def("total_massive_density", &pv::total_massive_density, py::arg("a"),
        py::arg("a_cr"), py::arg("m"), py::arg("epsilon0"), py::arg("r"),
        py::arg("include_real") = true);
}
