// Command-line surface for the truncated unitary-convolution ring.
// Every subcommand works on the plain-text function format and requires
// an explicit --bound; truncation is part of the semantics, so there is
// no default.

#include <CLI11.hpp>

#include <climits>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "unitary/arith_func.hpp"
#include "unitary/factorization.hpp"
#include "unitary/io.hpp"
#include "unitary/numtheory.hpp"
#include "unitary/structure.hpp"

namespace {

using namespace unitary;

struct Output {
  std::string path;  // empty = stdout

  template <typename Fn>
  void emit(Fn&& fn) const {
    if (path.empty()) {
      fn(std::cout);
    } else {
      std::ofstream out(path);
      if (!out) throw std::invalid_argument("cannot open output " + path);
      fn(out);
    }
  }
};

ArithFunc load(const std::string& path, long bound) {
  ArithFunc f = read_func_file(path);
  if (f.bound() != bound) {
    throw std::invalid_argument(path + ": bound " + std::to_string(f.bound()) +
                                " does not match --bound " +
                                std::to_string(bound));
  }
  return f;
}

std::vector<Coeff> parse_coeff_list(const std::string& text) {
  std::vector<Coeff> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) coeffs.push_back(Coeff::parse(item));
  }
  return coeffs;
}

std::string order_str(const std::optional<long>& k) {
  return k ? std::to_string(*k) : std::string("above-bound");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic in the truncated ring of arithmetical "
               "functions under unitary convolution"};
  app.require_subcommand(1);

  long bound = 0;
  std::string out_path;
  std::vector<std::string> inputs;
  long karg = 1, narg = 1, marg = 1, Larg = 0, cap = 0, max_n = 0;
  std::string qlist, coeff_list = "1";
  bool q_odd = false;

  auto add_common = [&](CLI::App* cmd, int n_inputs) {
    cmd->add_option("--bound,-N", bound, "truncation bound N")->required();
    cmd->add_option("-o", out_path, "output path (default stdout)");
    if (n_inputs > 0) {
      cmd->add_option("inputs", inputs, "function file(s)")
          ->expected(n_inputs == INT_MAX ? -1 : n_inputs)
          ->required();
    }
    return cmd;
  };

  auto* c_conv = add_common(app.add_subcommand("conv", "unitary convolution"), 2);
  auto* c_dconv =
      add_common(app.add_subcommand("dconv", "Dirichlet convolution"), 2);
  auto* c_inv = add_common(app.add_subcommand("inv", "convolution inverse"), 1);
  auto* c_pow = add_common(app.add_subcommand("pow", "unitary power"), 1);
  c_pow->add_option("-n", narg, "exponent")->required();
  auto* c_mobius =
      add_common(app.add_subcommand("mobius", "unitary Moebius function"), 0);
  auto* c_one = add_common(app.add_subcommand("one", "constant 1 function"), 0);
  auto* c_e = add_common(app.add_subcommand("e", "indicator e_k"), 0);
  c_e->add_option("-k", karg, "index")->required();
  auto* c_norm =
      add_common(app.add_subcommand("norm", "order and norm of f"), 1);
  auto* c_degree = add_common(app.add_subcommand("degree", "degree of f"), 1);
  auto* c_decomp = add_common(
      app.add_subcommand("decompose", "canonical decomposition by class"), 1);
  auto* c_filt =
      add_common(app.add_subcommand("filtration", "filtration degree"), 1);
  auto* c_nil = add_common(
      app.add_subcommand("nilindex", "smallest vanishing power in A_N"), 1);
  c_nil->add_option("--max", max_n, "search limit")->required();
  auto* c_rsqf = add_common(
      app.add_subcommand("retract-sqf", "square-free retraction"), 1);
  auto* c_rq = add_common(
      app.add_subcommand("retract-q", "exponent-set retraction"), 1);
  c_rq->add_option("--q", qlist, "allowed exponents, comma separated");
  c_rq->add_flag("--odd", q_odd, "allow all odd exponents");
  auto* c_ik = add_common(app.add_subcommand("ik", "membership in I_k"), 1);
  c_ik->add_option("-k", karg, "ideal index")->required();
  auto* c_ann = add_common(
      app.add_subcommand("ann-check",
                         "does f annihilate e_{p_1...p_K} in A_N"),
      1);
  c_ann->add_option("-k", karg, "K")->required();
  auto* c_endo = add_common(
      app.add_subcommand("endo", "apply a continuous endomorphism"), 2);
  auto* c_basis = add_common(
      app.add_subcommand("basis", "echelonized order-indexed family"), INT_MAX);
  auto* c_express = add_common(
      app.add_subcommand("express",
                         "express f in a basis file (f, then basis blocks)"),
      2);
  auto* c_kernel = add_common(
      app.add_subcommand("kernel", "kernel of convolution by f on [1..M]"), 1);
  c_kernel->add_option("-m", marg, "support cap M for the unknowns")
      ->required();
  auto* c_verify = add_common(
      app.add_subcommand("verify-factor", "verify target = product of factors"),
      INT_MAX);
  auto* c_search = add_common(
      app.add_subcommand("search", "exhaustive two-factor search"), 1);
  c_search->add_option("--cap", cap, "support cap")->required();
  c_search->add_option("--coeffs", coeff_list, "coefficient set");
  auto* c_assoc =
      add_common(app.add_subcommand("associate", "strong-associate test"), 2);
  auto* c_nfg = app.add_subcommand(
      "demo-nfg", "transcript: e_L escapes the generators e_2..e_cap");
  c_nfg->add_option("-L", Larg, "prime L")->required();
  c_nfg->add_option("--cap", cap, "generator cap")->required();
  c_nfg->add_option("-o", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, success
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage / parse errors
  }

  Output out{out_path};
  try {
    if (c_conv->parsed()) {
      ArithFunc h = uconv(load(inputs[0], bound), load(inputs[1], bound));
      out.emit([&](std::ostream& os) { write_func(os, h); });
    } else if (c_dconv->parsed()) {
      ArithFunc h = dconv(load(inputs[0], bound), load(inputs[1], bound));
      out.emit([&](std::ostream& os) { write_func(os, h); });
    } else if (c_inv->parsed()) {
      ArithFunc h = inverse(load(inputs[0], bound));
      out.emit([&](std::ostream& os) { write_func(os, h); });
    } else if (c_pow->parsed()) {
      ArithFunc h = upow(load(inputs[0], bound), narg);
      out.emit([&](std::ostream& os) { write_func(os, h); });
    } else if (c_mobius->parsed()) {
      ArithFunc h = mobius_star(bound);
      out.emit([&](std::ostream& os) { write_func(os, h); });
    } else if (c_one->parsed()) {
      ArithFunc h = ArithFunc::one(bound);
      out.emit([&](std::ostream& os) { write_func(os, h); });
    } else if (c_e->parsed()) {
      ArithFunc h = ArithFunc::e(karg, bound);
      out.emit([&](std::ostream& os) { write_func(os, h); });
    } else if (c_norm->parsed()) {
      ArithFunc f = load(inputs[0], bound);
      out.emit([&](std::ostream& os) {
        os << "order=" << order_str(order(f)) << " norm=" << norm(f) << "\n";
      });
    } else if (c_degree->parsed()) {
      auto deg = degree(load(inputs[0], bound));
      out.emit([&](std::ostream& os) {
        os << (deg ? std::to_string(*deg) : std::string("undefined")) << "\n";
      });
    } else if (c_decomp->parsed()) {
      auto dec = canonical_decompose(load(inputs[0], bound));
      out.emit([&](std::ostream& os) {
        os << "constant: " << dec.constant_term.str() << "\n";
        for (const auto& [i, part] : dec.parts) {
          os << "\n# class " << i << "\n";
          write_func(os, part);
        }
      });
    } else if (c_filt->parsed()) {
      long d = filtration_degree(load(inputs[0], bound));
      out.emit([&](std::ostream& os) { os << d << "\n"; });
    } else if (c_nil->parsed()) {
      auto idx = nilpotency_index(load(inputs[0], bound), max_n);
      out.emit([&](std::ostream& os) {
        os << (idx ? std::to_string(*idx) : std::string("not-found-within-" +
                                                        std::to_string(max_n)))
           << "\n";
      });
    } else if (c_rsqf->parsed()) {
      ArithFunc h = retract_sqf(load(inputs[0], bound));
      out.emit([&](std::ostream& os) { write_func(os, h); });
    } else if (c_rq->parsed()) {
      ArithFunc f = load(inputs[0], bound);
      ArithFunc h(bound);
      if (q_odd) {
        h = retract_Q(f, [](long a) { return a % 2 == 1; });
      } else {
        std::set<long> Q;
        std::stringstream ss(qlist);
        std::string item;
        while (std::getline(ss, item, ',')) {
          if (!item.empty()) Q.insert(std::stol(item));
        }
        if (Q.empty()) {
          throw std::invalid_argument("retract-q: need --q or --odd");
        }
        h = retract_Q(f, Q);
      }
      out.emit([&](std::ostream& os) { write_func(os, h); });
    } else if (c_ik->parsed()) {
      bool r = in_Ik(load(inputs[0], bound), karg);
      out.emit([&](std::ostream& os) { os << (r ? "true" : "false") << "\n"; });
    } else if (c_ann->parsed()) {
      bool r = annihilates_squarefree_block(load(inputs[0], bound), karg);
      out.emit([&](std::ostream& os) { os << (r ? "true" : "false") << "\n"; });
    } else if (c_endo->parsed()) {
      ArithFunc f = load(inputs[0], bound);
      std::ifstream tin(inputs[1]);
      if (!tin) throw std::invalid_argument("cannot open " + inputs[1]);
      GammaTable table = read_gamma_table(tin);
      if (table.bound() != bound) {
        throw std::invalid_argument("gamma table bound mismatch");
      }
      ArithFunc h = apply_endomorphism(f, table);
      out.emit([&](std::ostream& os) { write_func(os, h); });
    } else if (c_basis->parsed()) {
      std::vector<ArithFunc> gens;
      for (const auto& path : inputs) gens.push_back(load(path, bound));
      BasisFamily family = echelon_basis(gens);
      out.emit([&](std::ostream& os) {
        bool first = true;
        for (const auto& [k, g] : family.entries) {
          if (!first) os << "\n";
          first = false;
          write_func(os, g);
        }
      });
    } else if (c_express->parsed()) {
      ArithFunc f = load(inputs[0], bound);
      std::ifstream bin(inputs[1]);
      if (!bin) throw std::invalid_argument("cannot open " + inputs[1]);
      BasisFamily family;
      for (auto& g : read_blocks(bin)) {
        if (g.bound() != bound) {
          throw std::invalid_argument("basis block bound mismatch");
        }
        auto k = order(g);
        if (!k) throw std::invalid_argument("zero block in basis file");
        family.entries.emplace(*k, std::move(g));
      }
      ExpressResult res = express_in_basis(f, family);
      out.emit([&](std::ostream& os) {
        for (const auto& [k, a] : res.terms) {
          os << k << " " << a.str() << "\n";
        }
        if (!res.exact) {
          os << "residue-nonzero:\n";
          write_func(os, res.residue);
        }
      });
    } else if (c_kernel->parsed()) {
      auto basis = regularity_kernel(load(inputs[0], bound), marg);
      out.emit([&](std::ostream& os) {
        if (basis.empty()) {
          os << "# empty kernel\n";
        } else {
          write_blocks(os, basis);
        }
      });
    } else if (c_verify->parsed()) {
      if (inputs.size() < 2) {
        throw std::invalid_argument("verify-factor: need target and factors");
      }
      ArithFunc target = load(inputs[0], bound);
      std::vector<ArithFunc> factors;
      for (std::size_t i = 1; i < inputs.size(); ++i) {
        factors.push_back(load(inputs[i], bound));
      }
      auto cert = verify_factorization(target, factors);
      out.emit([&](std::ostream& os) { write_certificate(os, cert); });
    } else if (c_search->parsed()) {
      auto certs =
          atom_search(load(inputs[0], bound), cap, parse_coeff_list(coeff_list));
      out.emit([&](std::ostream& os) {
        if (certs.empty()) {
          os << "no factorization found within bounds\n";
        }
        for (const auto& cert : certs) {
          write_certificate(os, cert);
          os << "\n";
        }
      });
    } else if (c_assoc->parsed()) {
      bool r = is_associate(load(inputs[0], bound), load(inputs[1], bound));
      out.emit([&](std::ostream& os) { os << (r ? "true" : "false") << "\n"; });
    } else if (c_nfg->parsed()) {
      auto t = demo_not_finitely_generated(Larg, cap);
      out.emit([&](std::ostream& os) { write_transcript(os, t); });
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
