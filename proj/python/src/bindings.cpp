#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <blwave/io.hpp>

namespace py = pybind11;
using namespace blwave;

namespace {

FrequencyWavelet from_descriptor(const std::string& text) {
  return descriptor_from_json(Json::parse(text)).w;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact construction and verification of band-limited step-profile "
            "wavelets. All structured results are JSON text; rationals are "
            "strings of the form p/q (coefficients of pi).";

  m.def(
      "build",
      [](const std::string& family, int n, int p) {
        auto f = family_from_name(family);
        if (!f) throw std::invalid_argument("unknown family: " + family);
        Descriptor d{build_family(*f, n, p), std::nullopt, false};
        return descriptor_to_json(d).dump();
      },
      py::arg("family"), py::arg("n") = 0, py::arg("p") = 0,
      "Build a named construction; returns the descriptor as JSON text.");

  m.def(
      "random_candidate",
      [](int n, std::uint64_t seed, const std::string& kind, bool even_bell) {
        CandidateKind k;
        if (kind == "valid")
          k = CandidateKind::Valid;
        else if (kind == "broken-iii")
          k = CandidateKind::BrokenIii;
        else if (kind == "broken-v")
          k = CandidateKind::BrokenV;
        else
          throw std::invalid_argument("unknown candidate kind: " + kind);
        Candidate c = random_candidate(SnGeometry::make(n), seed, k, even_bell);
        return descriptor_to_json({c.w, c.marked_cell, false}).dump();
      },
      py::arg("n"), py::arg("seed"), py::arg("kind") = "valid",
      py::arg("even_bell") = false,
      "Seeded candidate generator; returns a descriptor, marked cell included "
      "for the broken kinds.");

  m.def(
      "verify",
      [](const std::string& descriptor) {
        return verification_to_json(verify(from_descriptor(descriptor))).dump();
      },
      py::arg("descriptor"),
      "Exact verification report for a descriptor (JSON in, JSON out).");

  m.def(
      "dimension",
      [](const std::string& descriptor) {
        return dimension_to_json(dimension_function(from_descriptor(descriptor)))
            .dump();
      },
      py::arg("descriptor"));

  m.def(
      "closed_form_dimension",
      [](int n) { return dimension_to_json(closed_form_dn(n)).dump(); },
      py::arg("n"),
      "The dimension profile shared by every wavelet supported in the n-th "
      "skeleton.");

  m.def(
      "classify",
      [](const std::string& descriptor, int max_k) {
        return class_label_to_json(classify(from_descriptor(descriptor), max_k))
            .dump();
      },
      py::arg("descriptor"), py::arg("max_k") = 16,
      "Translation equivalence class of the support.");

  m.def(
      "wavelet_set_check",
      [](const std::string& name, int n) {
        auto s = named_set(name, n);
        if (!s) throw std::invalid_argument("unknown set: " + name);
        return wavelet_set_verdict_to_json(wavelet_set_check(*s)).dump();
      },
      py::arg("name"), py::arg("n") = 3,
      "Tiling verdict for a named frequency set "
      "(shannon|journe|lemarie|S_n|W_n|F_n).");

  m.def(
      "sample_time",
      [](const std::string& descriptor, double x_min, double x_max, int count) {
        TimeSamples t =
            sample_time(from_descriptor(descriptor), x_min, x_max, count);
        return py::make_tuple(t.xs, t.values, t.hermitian);
      },
      py::arg("descriptor"), py::arg("x_min"), py::arg("x_max"),
      py::arg("count"),
      "Closed-form time samples: (xs, values, hermitian).");

  m.def(
      "time_value",
      [](const std::string& descriptor, double x) {
        return time_value(from_descriptor(descriptor), x);
      },
      py::arg("descriptor"), py::arg("x"));

  m.def(
      "gram_entry",
      [](const std::string& descriptor, int j, long k, int j2, long k2) {
        return gram_entry(from_descriptor(descriptor), j, k, j2, k2);
      },
      py::arg("descriptor"), py::arg("j"), py::arg("k"), py::arg("j2"),
      py::arg("k2"),
      "Inner product of the (j,k) and (j2,k2) dilate-translates.");
}
