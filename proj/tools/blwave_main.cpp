#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "blwave/io.hpp"

using namespace blwave;

namespace {

// Exit contract: 0 success / verified-true, 1 verified-false,
// 2 usage or parameter error, 3 I/O or parse error.
constexpr int kOk = 0, kFalse = 1, kUsage = 2, kIo = 3;

// Relative output paths land in BLWAVE_OUT_DIR when it is set.
std::string resolve_out(const std::string& path) {
  const char* dir = std::getenv("BLWAVE_OUT_DIR");
  if (!dir || !*dir) return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(dir) / p).string();
}

Descriptor load_descriptor(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  try {
    return descriptor_from_json(j);
  } catch (const Json::exception& e) {
    throw std::runtime_error(path + ": malformed descriptor: " + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(path + ": malformed descriptor: " + e.what());
  }
}

int cmd_construct(const std::string& family, int n, std::optional<int> p,
                  const std::string& bell_file, std::uint64_t seed,
                  const std::string& kind, const std::string& out) {
  Descriptor d;
  try {
    if (family == "custom" || family == "random") {
      SnGeometry g = SnGeometry::make(n);
      if (family == "custom") {
        if (bell_file.empty())
          throw std::invalid_argument("--family custom requires --bell FILE");
        StepProfile bell2;
        try {
          bell2 = step_profile_from_json(Json::parse(read_text_file(bell_file)));
        } catch (const Json::exception& e) {
          std::cerr << "blwave: " << bell_file << ": " << e.what() << "\n";
          return kIo;
        } catch (const std::runtime_error& e) {
          std::cerr << "blwave: " << e.what() << "\n";
          return kIo;
        }
        d.w = from_custom_bell(g, bell2);
      } else {
        CandidateKind ck;
        if (kind == "valid")
          ck = CandidateKind::Valid;
        else if (kind == "broken-iii")
          ck = CandidateKind::BrokenIii;
        else if (kind == "broken-v")
          ck = CandidateKind::BrokenV;
        else
          throw std::invalid_argument("--kind must be valid, broken-iii or broken-v");
        Candidate c = random_candidate(g, seed, ck);
        d.w = std::move(c.w);
        d.marked_cell = c.marked_cell;
      }
    } else {
      auto fam = family_from_name(family);
      if (!fam) throw std::invalid_argument("unknown family: " + family);
      if (!kind.empty() && kind != "valid")
        throw std::invalid_argument("--kind applies to --family random only");
      d.w = build_family(*fam, n, p.value_or(0));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "blwave: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "blwave: " << e.what() << "\n";
    return kUsage;
  }
  IntervalSet supp = d.w.support();
  std::cout << "support measure = " << supp.measure().str() << " pi, pieces = "
            << supp.pieces().size() << "\n";
  try {
    write_text_file(resolve_out(out), descriptor_to_json(d).dump(2) + "\n");
  } catch (const std::runtime_error& e) {
    std::cerr << "blwave: " << e.what() << "\n";
    return kIo;
  }
  return kOk;
}

int cmd_verify(const std::string& file) {
  Descriptor d;
  try {
    d = load_descriptor(file);
  } catch (const std::runtime_error& e) {
    std::cerr << "blwave: " << e.what() << "\n";
    return kIo;
  }
  VerificationReport rep;
  try {
    rep = verify(d.w);
  } catch (const std::exception& e) {
    std::cerr << "blwave: cannot verify: " << e.what() << "\n";
    return kUsage;
  }
  std::cout << verification_to_json(rep).dump(2) << "\n";
  if (rep.verdict() && !d.verified) {
    d.verified = true;
    try {
      write_text_file(file, descriptor_to_json(d).dump(2) + "\n");
    } catch (const std::runtime_error& e) {
      std::cerr << "blwave: note: could not record verification: " << e.what()
                << "\n";
    }
  }
  return rep.verdict() ? kOk : kFalse;
}

int cmd_dimension(const std::string& file, std::optional<int> closed_form,
                  const std::string& csv) {
  Descriptor d;
  try {
    d = load_descriptor(file);
  } catch (const std::runtime_error& e) {
    std::cerr << "blwave: " << e.what() << "\n";
    return kIo;
  }
  try {
    DimensionProfile prof = dimension_function(d.w);
    std::cout << dimension_to_json(prof).dump(2) << "\n";
    if (closed_form) {
      DimensionProfile cf = closed_form_dn(*closed_form);  // throws for n < 3
      std::cout << "closed-form check: "
                << (prof.profile == cf.profile ? "EXACT MATCH" : "MISMATCH")
                << "\n";
    }
    if (!csv.empty()) write_text_file(resolve_out(csv), dimension_csv(prof));
  } catch (const std::runtime_error& e) {
    std::cerr << "blwave: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "blwave: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

int cmd_classify(const std::string& file, int max_class, bool force_verify) {
  Descriptor d;
  try {
    d = load_descriptor(file);
  } catch (const std::runtime_error& e) {
    std::cerr << "blwave: " << e.what() << "\n";
    return kIo;
  }
  if (!d.verified && !force_verify) {
    std::cerr << "blwave: descriptor is not marked verified; run `blwave "
                 "verify` first or pass --force-verify\n";
    return kUsage;
  }
  try {
    if (force_verify && !d.verified) {
      if (!verify(d.w).verdict()) {
        std::cerr << "blwave: verification failed; not a wavelet\n";
        return kFalse;
      }
    }
    std::cout << class_label_to_json(classify(d.w, max_class)).dump(2) << "\n";
  } catch (const std::exception& e) {
    std::cerr << "blwave: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

int cmd_sample(const std::string& file, double lo, double hi, int points,
               const std::string& csv) {
  Descriptor d;
  try {
    d = load_descriptor(file);
  } catch (const std::runtime_error& e) {
    std::cerr << "blwave: " << e.what() << "\n";
    return kIo;
  }
  try {
    TimeSamples t = sample_time(d.w, lo, hi, points);
    std::string body = time_samples_csv(t);
    if (csv.empty())
      std::cout << body;
    else
      write_text_file(resolve_out(csv), body);
    std::cerr << (t.hermitian ? "psi is real (Hermitian spectrum)\n"
                              : "psi is complex-valued\n");
  } catch (const std::runtime_error& e) {
    std::cerr << "blwave: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "blwave: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"band-limited wavelet construction and exact verification"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "build a wavelet descriptor");
  std::string family, bell_file, kind = "valid", out;
  int n = 0;
  std::optional<int> p;
  std::uint64_t seed = 0;
  construct->add_option("--family", family,
                        "gamma|msf-a|msf-b|psi-sixone|w-sixtwo|shannon|custom|random")
      ->required();
  construct->add_option("--n", n, "skeleton index");
  construct->add_option("--p", p, "msf-b band parameter");
  construct->add_option("--bell", bell_file, "squared-bell JSON (custom family)");
  construct->add_option("--seed", seed, "generator seed (random family)");
  construct->add_option("--kind", kind, "valid|broken-iii|broken-v (random family)");
  construct->add_option("-o,--out", out, "output descriptor path")->required();

  auto* verify_cmd = app.add_subcommand("verify", "check the wavelet equations exactly");
  std::string verify_file;
  verify_cmd->add_option("file", verify_file, "descriptor path")->required();

  auto* dimension = app.add_subcommand("dimension", "dimension function and MRA verdict");
  std::string dim_file, dim_csv;
  std::optional<int> closed_form;
  dimension->add_option("file", dim_file, "descriptor path")->required();
  dimension->add_option("--closed-form", closed_form,
                        "compare against the closed-form profile for this n");
  dimension->add_option("--csv", dim_csv, "CSV output path");

  auto* classify_cmd = app.add_subcommand("classify", "translation equivalence class");
  std::string cls_file;
  int max_class = 16;
  bool force_verify = false;
  classify_cmd->add_option("file", cls_file, "descriptor path")->required();
  classify_cmd->add_option("--max-class", max_class, "search bound");
  classify_cmd->add_flag("--force-verify", force_verify,
                         "verify in-process before classifying");

  auto* sample = app.add_subcommand("sample", "time-domain samples (CSV)");
  std::string smp_file, smp_csv;
  double range_lo = 0, range_hi = 0;
  int points = 0;
  sample->add_option("file", smp_file, "descriptor path")->required();
  sample->add_option("--range", [&](const std::vector<std::string>& vals) {
        range_lo = std::stod(vals.at(0));
        range_hi = std::stod(vals.at(1));
        return true;
      }, "x range: A B")
      ->expected(2)
      ->required();
  sample->add_option("--points", points, "sample count")->required();
  sample->add_option("--csv", smp_csv, "CSV output path (stdout otherwise)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (construct->parsed())
      return cmd_construct(family, n, p, bell_file, seed, kind, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_file);
    if (dimension->parsed()) return cmd_dimension(dim_file, closed_form, dim_csv);
    if (classify_cmd->parsed())
      return cmd_classify(cls_file, max_class, force_verify);
    if (sample->parsed())
      return cmd_sample(smp_file, range_lo, range_hi, points, smp_csv);
  } catch (const std::exception& e) {
    std::cerr << "blwave: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
