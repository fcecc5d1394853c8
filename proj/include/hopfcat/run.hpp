#pragma once

#include <string>

#include "hopfcat/model.hpp"
#include "hopfcat/parallel.hpp"
#include "hopfcat/report.hpp"

namespace hopfcat {

/* One executed command: the report envelope plus the overall verdict bit.
   Input problems (unknown names, malformed rows) throw ModelError/HopfError;
   a false `pass` means the mathematics failed, not the invocation. */
struct RunResult {
  Json report;
  bool pass = false;
};

RunResult run_check_axioms(const Model& m, const std::string& model_path,
                           const std::string& object, ExecMode mode = default_exec_mode());

RunResult run_decompose(const Model& m, const std::string& model_path,
                        const std::string& object, ExecMode mode = default_exec_mode());

RunResult run_torsion(const Model& m, const std::string& model_path,
                      const std::string& object, ExecMode mode = default_exec_mode());

RunResult run_factorize(const Model& m, const std::string& model_path,
                        const std::string& morphism, ExecMode mode = default_exec_mode());

/* `s` may be empty: the sequence is audited without a section. */
RunResult run_verify_ses(const Model& m, const std::string& model_path, const std::string& i,
                         const std::string& p, const std::string& s = {},
                         ExecMode mode = default_exec_mode());

/* `lemma` is "five" or "surjectivity". */
RunResult run_verify_diagram(const Model& m, const std::string& model_path,
                             const std::string& diagram, const std::string& lemma,
                             ExecMode mode = default_exec_mode());

RunResult run_zero_hom(const Model& m, const std::string& model_path, const std::string& source,
                       const std::string& target, ExecMode mode = default_exec_mode());

}  // namespace hopfcat
