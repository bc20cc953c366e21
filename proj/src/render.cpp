#include "hyperlow/render.hpp"

#include <cstdio>

namespace hyperlow {

using nlohmann::json;

json envelope(const std::string& kind) {
  return json{{"schema", kSchema}, {"kind", kind}};
}

json to_json(const Weight& w) { return w.entries(); }

json to_json(const NodePairSet& s) {
  json out = json::array();
  for (auto [t, u] : s) out.push_back({t, u});
  return out;
}

json to_json(const Gamma& g) {
  json out = json::array();
  for (const auto& [m, x] : g) out.push_back({{"m", m}, {"t", x.t}, {"s", x.s}});
  return out;
}

json to_json(const InjectionWitness& w) {
  json out = json::array();
  for (const auto& [src, dst] : w.assignment) {
    out.push_back({{"from", src}, {"to", dst}});
  }
  return out;
}

json to_json(const CriterionQuery& q, const CriterionVerdict& v) {
  json out = envelope("check");
  out["lambda"] = to_json(q.ctx.lambda);
  out["mu"] = to_json(q.ctx.mu);
  out["p"] = q.ctx.p;
  out["i"] = q.i;
  out["j"] = q.j;
  out["d"] = q.d;
  out["M"] = q.M;
  out["case"] = q.j == q.ctx.n() ? "terminal" : "inner";
  out["holds"] = v.holds;
  if (!v.holds) out["reason"] = v.reason;
  if (q.j == q.ctx.n()) {
    if (v.holds) out["gamma"] = to_json(v.gamma);
  } else {
    json ks = json::array();
    for (const auto& w : v.per_k) {
      json k{{"K", w.K}, {"gamma", to_json(w.gamma)}};
      if (w.free_node) k["free_pair"] = {w.free_node->t, w.free_node->s};
      ks.push_back(k);
    }
    out["per_K"] = ks;
  }
  return out;
}

json to_json(const LoweringElement& T) {
  json terms = json::array();
  for (const auto& [N, h] : T.terms()) {
    json entries = json::array();
    for (const auto& e : N.entries()) entries.push_back({e.a, e.b, e.count});
    terms.push_back({{"N", entries}, {"coeff", h.str()}});
  }
  return terms;
}

json to_json(const ReachClosure& c) {
  json nodes = json::array();
  for (const auto& node : c.reached) {
    json chain = json::array();
    for (const auto& s : node.chain) {
      chain.push_back({{"i", s.i}, {"j", s.j}, {"d", s.d}, {"M", s.M},
                       {"to", to_json(s.to)}});
    }
    nodes.push_back({{"mu", to_json(node.mu)}, {"chain", chain}});
  }
  json flagged = json::array();
  for (const auto& s : c.flagged) {
    flagged.push_back({{"from", to_json(s.from)}, {"to", to_json(s.to)},
                       {"i", s.i}, {"j", s.j}, {"d", s.d}, {"M", s.M}});
  }
  return {{"mode", reach_mode_name(c.mode)}, {"reached", nodes}, {"flagged", flagged}};
}

json to_json(const ReachReport& r) {
  json out = envelope("reach");
  out["lambda"] = to_json(r.all.lambda);
  out["p"] = r.all.p;
  out["all"] = to_json(r.all);
  out["d1"] = to_json(r.d_one);
  json diff = json::array();
  for (const auto& w : r.difference) diff.push_back(to_json(w));
  out["difference"] = diff;
  out["difference_count"] = r.difference.size();
  return out;
}

json to_json(const BatteryResult& r) {
  return {{"name", r.name}, {"checked", r.checked}, {"failures", r.failures},
          {"passed", r.passed()}, {"counterexamples", r.counterexamples}};
}

std::string render_text(const CriterionQuery& q, const CriterionVerdict& v) {
  std::string out = v.holds ? "holds" : "fails";
  if (!v.holds) out += ": " + v.reason;
  out += "\n";
  if (!v.holds) return out;
  if (q.j == q.ctx.n()) {
    out += "gamma: " + format_gamma(v.gamma) + "\n";
  } else {
    for (const auto& w : v.per_k) {
      out += "K=(";
      for (size_t k = 0; k < w.K.size(); ++k) {
        out += (k ? "," : "") + std::to_string(w.K[k]);
      }
      out += ") gamma: " + format_gamma(w.gamma);
      if (w.free_node) {
        out += " free: (" + std::to_string(w.free_node->t) + "," +
               std::to_string(w.free_node->s) + ")";
      }
      out += "\n";
    }
  }
  return out;
}

std::string render_text(const ReachReport& r) {
  std::string out;
  for (const auto* c : {&r.all, &r.d_one}) {
    out += "mode " + reach_mode_name(c->mode) + ": " +
           std::to_string(c->reached.size()) + " weights\n";
    for (const auto& node : c->reached) {
      out += "  " + node.mu.str() + "  " + format_chain(node.chain) + "\n";
    }
    for (const auto& s : c->flagged) {
      out += "  flagged " + s.to.str() + " from " + s.from.str() + "\n";
    }
  }
  out += "difference: " + std::to_string(r.difference.size());
  for (const auto& w : r.difference) out += " " + w.str();
  return out + "\n";
}

std::string render_text(const BatteryResult& r) {
  std::string out = std::string(r.passed() ? "PASS" : "FAIL") + "  " + r.name +
                    "  checked=" + std::to_string(r.checked) +
                    " failures=" + std::to_string(r.failures) + "\n";
  for (const auto& c : r.counterexamples) out += "    " + c + "\n";
  return out;
}

std::string table1_header() { return "p\tn\tmax\targmax_lambda\telapsed_ms"; }

std::string table1_row(const Table1Entry& e) {
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.1f", e.elapsed_ms);
  return std::to_string(e.p) + "\t" + std::to_string(e.n) + "\t" +
         std::to_string(e.max_count) + "\t" + e.argmax.str() + "\t" + ms;
}

}  // namespace hyperlow
