#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace downup::cli {

struct Reply {
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json result;
  std::string provenance;
  std::string text;
  int exit_code = 0;
};

Reply nf(const std::string& params, const std::string& expr);
Reply omega(const std::string& params, const std::string& expr, bool to_pbw);
Reply member(const std::string& params, const std::string& expr, unsigned n);
Reply bimod(const std::string& params, const std::string& expr);
Reply bimod_formula(const std::string& params, unsigned i, unsigned l, const std::string& side);
Reply project(const std::string& params, const std::string& expr);
Reply qnf(const std::string& alpha, const std::string& constant, const std::string& expr);
Reply abel(const std::string& params);
Reply tor(const std::string& params, const std::string& t1, const std::string& t2, bool mechanical);
Reply torbound(const std::string& params, unsigned samples);
Reply classify_type(const std::string& params);
Reply classify_iso(const std::string& left, const std::string& right);
Reply classify_monomial(const std::string& params);
Reply classify_report(const std::string& left, const std::string& right, unsigned samples);
Reply lambda(const std::string& alpha, unsigned m_max);
Reply quiver_abel(const std::string& path);
Reply verify(const std::string& only);

}  // namespace downup::cli
