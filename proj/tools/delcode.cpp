#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "delcode/codec.hpp"
#include "delcode/oracle.hpp"
#include "delcode/regular.hpp"
#include "delcode/sketch.hpp"

namespace {

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

delcode::BitString read_bits(const std::string& arg) {
  const bool literal =
      !arg.empty() && arg.find_first_not_of("01") == std::string::npos;
  if (literal) return delcode::BitString::from_string(arg);
  std::ifstream in(arg);
  if (!in) throw usage_error("cannot open input: " + arg);
  std::string collected;
  char c;
  while (in.get(c))
    if (c == '0' || c == '1') collected.push_back(c);
  if (collected.empty()) throw usage_error("no bits found in: " + arg);
  return delcode::BitString::from_string(collected);
}

delcode::SketchVariant parse_variant(const std::string& name) {
  if (name == "vt1") return delcode::SketchVariant::vt1;
  if (name == "run1") return delcode::SketchVariant::run1;
  if (name == "list2") return delcode::SketchVariant::list2;
  if (name == "unique2") return delcode::SketchVariant::unique2;
  throw usage_error("unknown variant: " + name);
}

std::string hex_bytes(const std::vector<std::uint8_t>& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

int cmd_sketch(const std::string& variant_name, const std::string& input) {
  const delcode::BitString x = read_bits(input);
  const auto variant = parse_variant(variant_name);
  const auto params = delcode::CodeParams::make(x.size(), variant);
  const auto b = delcode::bundle(x, params);

  std::cout << "variant=" << delcode::to_string(variant) << "\n";
  std::cout << "n=" << params.n << "\n";
  if (params.mod_f1) {
    std::cout << "f1=" << b.f1 << "\n";
    std::cout << "mod_f1=" << params.mod_f1 << "\n";
  }
  if (params.mod_f2) {
    std::cout << "f2=" << b.f2 << "\n";
    std::cout << "mod_f2=" << params.mod_f2 << "\n";
  }
  if (params.mod_f1r) {
    std::cout << "f1r=" << b.f1r << "\n";
    std::cout << "mod_f1r=" << params.mod_f1r << "\n";
  }
  if (params.mod_f2r) {
    std::cout << "f2r=" << b.f2r << "\n";
    std::cout << "mod_f2r=" << params.mod_f2r << "\n";
  }
  if (params.has_ones3) std::cout << "ones_mod3=" << int(b.ones3) << "\n";
  if (params.has_runs5) std::cout << "runs_mod5=" << int(b.runs5) << "\n";
  if (b.blocks) {
    const auto& [aligned, straddling] = *b.blocks;
    std::cout << "block_len=" << params.blocks->length << "\n";
    std::cout << "aligned_f2r_xor=" << aligned.f2r_xor << "\n";
    std::cout << "aligned_f3r_xor=" << aligned.f3r_xor << "\n";
    std::cout << "straddling_f2r_xor=" << straddling.f2r_xor << "\n";
    std::cout << "straddling_f3r_xor=" << straddling.f3r_xor << "\n";
  }
  std::cout << "serialized=" << hex_bytes(delcode::serialize_bundle(b)) << "\n";
  return 0;
}

int cmd_encode(std::size_t n, const std::string& message) {
  const auto params =
      delcode::CodeParams::make(n, delcode::SketchVariant::unique2);
  delcode::BigInt msg;
  try {
    msg = delcode::BigInt(message);
  } catch (const std::exception&) {
    throw usage_error("message must be decimal or 0x-prefixed hex");
  }
  delcode::Codeword cw;
  try {
    cw = delcode::encode_message(msg, params);
  } catch (const std::out_of_range&) {
    throw usage_error("message outside the codebook capacity");
  }
  std::cout << "n=" << n << "\n";
  std::cout << "length=" << cw.length() << "\n";
  std::cout << "codeword=" << cw.assembled().to_string() << "\n";
  return 0;
}

int cmd_decode(std::size_t n, const std::string& received) {
  const auto params =
      delcode::CodeParams::make(n, delcode::SketchVariant::unique2);
  const auto r = delcode::decode_codeword(read_bits(received), params);
  if (!r.ok()) {
    std::cerr << "error=" << delcode::to_string(r.status) << "\n";
    return 1;
  }
  std::cout << "status=ok\n";
  std::cout << "message=" << (*r).str() << "\n";
  return 0;
}

int cmd_corrupt(unsigned deletions, std::uint64_t seed,
                const std::string& input) {
  const delcode::BitString x = read_bits(input);
  if (x.size() < deletions) throw usage_error("input shorter than deletions");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> pos;
  while (pos.size() < deletions) {
    const std::size_t p = rng() % x.size() + 1;
    if (std::find(pos.begin(), pos.end(), p) == pos.end()) pos.push_back(p);
  }
  std::sort(pos.begin(), pos.end());
  const delcode::DeletionPattern pat(pos);
  std::cout << "input_length=" << x.size() << "\n";
  std::ostringstream pl;
  for (std::size_t i = 0; i < pos.size(); ++i)
    pl << (i ? "," : "") << pos[i];
  std::cout << "positions=" << pl.str() << "\n";
  std::cout << "result=" << pat.apply(x).to_string() << "\n";
  return 0;
}

int cmd_verify(std::size_t max_n, const std::vector<std::string>& variants,
               unsigned jobs) {
  std::vector<delcode::SketchVariant> list;
  if (variants.empty()) {
    list = {delcode::SketchVariant::vt1, delcode::SketchVariant::run1,
            delcode::SketchVariant::list2, delcode::SketchVariant::unique2};
  } else {
    for (const auto& v : variants) list.push_back(parse_variant(v));
  }
  std::uint64_t failures = 0;
  for (const auto variant : list) {
    const unsigned k = (variant == delcode::SketchVariant::vt1 ||
                        variant == delcode::SketchVariant::run1)
                           ? 1
                           : 2;
    for (std::size_t n = k + 1; n <= max_n; ++n) {
      const auto rep = delcode::verify_variant_grid(n, variant, jobs);
      std::cout << "variant=" << delcode::to_string(variant) << " n=" << n
                << " cases=" << rep.cases << " failures=" << rep.failures
                << "\n";
      failures += rep.failures;
    }
  }
  std::cout << "result=" << (failures == 0 ? "PASS" : "FAIL") << "\n";
  return failures == 0 ? 0 : 1;
}

int cmd_report(const std::string& n_list) {
  std::stringstream ss(n_list);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t n = 0;
    try {
      n = std::stoull(item);
    } catch (const std::exception&) {
      throw usage_error("bad value in --n-list: " + item);
    }
    const auto params =
        delcode::CodeParams::make(n, delcode::SketchVariant::unique2);
    const auto row = delcode::redundancy_report(params);
    std::cout << "n=" << row.n << " middle_bits=" << row.middle_bits
              << " outer_bits=" << row.outer_bits
              << " overhead=" << row.overhead << " ratio=";
    std::cout.setf(std::ios::fixed);
    std::cout.precision(4);
    std::cout << row.ratio << "\n";
    std::cout.unsetf(std::ios::fixed);
    any = true;
  }
  if (!any) throw usage_error("--n-list is empty");
  return 0;
}

delcode::BigInt random_index(std::mt19937_64& rng,
                             const delcode::BigInt& capacity) {
  if (capacity <= 1) return 0;
  const unsigned bits = boost::multiprecision::msb(capacity) + 1;
  delcode::BigInt r = 0;
  for (unsigned got = 0; got < bits; got += 64) r = (r << 64) | rng();
  return r % capacity;
}

int cmd_bench(std::size_t n, std::size_t trials, std::uint64_t seed) {
  using clock = std::chrono::steady_clock;
  const auto params =
      delcode::CodeParams::make(n, delcode::SketchVariant::unique2);
  const delcode::RegularCodebook book(n, params.d);
  std::mt19937_64 rng(seed);

  double enc_total = 0, dec_total = 0;
  std::uint64_t failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const delcode::BigInt msg = random_index(rng, book.capacity());

    const auto enc_start = clock::now();
    const auto cw = delcode::encode_message(msg, params);
    enc_total += std::chrono::duration<double, std::micro>(clock::now() -
                                                           enc_start)
                     .count();

    delcode::BitString sent = cw.assembled();
    const unsigned dels = static_cast<unsigned>(rng() % 3);
    std::vector<std::size_t> pos;
    while (pos.size() < dels) {
      const std::size_t p = rng() % sent.size() + 1;
      if (std::find(pos.begin(), pos.end(), p) == pos.end()) pos.push_back(p);
    }
    std::sort(pos.begin(), pos.end());
    const delcode::BitString received = sent.erased(pos);

    const auto dec_start = clock::now();
    const auto r = delcode::decode_codeword(received, params);
    dec_total += std::chrono::duration<double, std::micro>(clock::now() -
                                                           dec_start)
                     .count();
    if (!r.ok() || *r != msg) ++failures;
  }

  std::cout << "n=" << n << "\n";
  std::cout << "trials=" << trials << "\n";
  std::cout << "failures=" << failures << "\n";
  std::cout.setf(std::ios::fixed);
  std::cout.precision(1);
  std::cout << "encode_us_mean=" << (trials ? enc_total / trials : 0.0)
            << "\n";
  std::cout << "decode_us_mean=" << (trials ? dec_total / trials : 0.0)
            << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deletion-code sketches, encoders, and decoders"};
  app.require_subcommand(1);

  std::string variant_name, input, message, received, n_list;
  std::size_t n = 0, max_n = 0, trials = 1000;
  unsigned deletions = 1, jobs = 1;
  std::uint64_t seed = 1;

  auto* sketch = app.add_subcommand("sketch", "print a string's sketch bundle");
  sketch->add_option("--variant", variant_name, "vt1, run1, list2, unique2")
      ->required();
  sketch->add_option("--input", input, "bitstring or file")->required();

  auto* encode = app.add_subcommand("encode", "message index to codeword");
  encode->add_option("--n", n, "payload length")->required();
  encode->add_option("--message", message, "decimal or 0x-prefixed hex")
      ->required();

  auto* decode = app.add_subcommand("decode", "codeword to message");
  decode->add_option("--n", n, "payload length")->required();
  decode->add_option("--received", received, "bitstring or file")->required();

  auto* corrupt = app.add_subcommand("corrupt", "delete random positions");
  corrupt->add_option("--deletions", deletions, "1 or 2")
      ->check(CLI::Range(1u, 2u));
  corrupt->add_option("--seed", seed, "RNG seed")->required();
  corrupt->add_option("--input", input, "bitstring or file")->required();

  auto* verify = app.add_subcommand("verify", "exhaustive oracle grid");
  std::vector<std::string> verify_variants;
  verify->add_option("--max-n", max_n, "largest length")->required();
  verify->add_option("--variant", verify_variants,
                     "restrict to listed variants");
  verify->add_option("--jobs", jobs, "worker threads");

  auto* report = app.add_subcommand("report", "redundancy accounting");
  report->add_option("--n-list", n_list, "comma-separated lengths")
      ->required();

  auto* bench = app.add_subcommand("bench", "encode/decode timings");
  bench->add_option("--n", n, "payload length")->required();
  bench->add_option("--trials", trials, "number of round trips");
  bench->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(sketch)) return cmd_sketch(variant_name, input);
    if (app.got_subcommand(encode)) return cmd_encode(n, message);
    if (app.got_subcommand(decode)) return cmd_decode(n, received);
    if (app.got_subcommand(corrupt)) return cmd_corrupt(deletions, seed, input);
    if (app.got_subcommand(verify))
      return cmd_verify(max_n, verify_variants, jobs);
    if (app.got_subcommand(report)) return cmd_report(n_list);
    if (app.got_subcommand(bench)) return cmd_bench(n, trials, seed);
  } catch (const usage_error& e) {
    std::cerr << "error=usage detail=" << e.what() << "\n";
    return 2;
  } catch (const delcode::internal_error& e) {
    std::cerr << "error=internal detail=" << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error=usage detail=" << e.what() << "\n";
    return 2;
  }
  return 2;
}
