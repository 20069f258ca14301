// SPDX-License-Identifier: Apache-2.0
#include <polygap/errors.hpp>
#include <polygap/simplex.hpp>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <memory>

namespace polygap {

namespace {

double trampoline(const gsl_vector* x, void* params) {
  const auto& objective = *static_cast<const Objective*>(params);
  return objective(std::span<const double>(x->data, x->size));
}

struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};

}  // namespace

SimplexOutcome minimize_simplex(const Objective& objective, std::span<const double> start,
                                const SimplexOptions& options) {
  const std::size_t dim = start.size();
  if (dim == 0) throw UsageError("minimize_simplex needs at least one dimension");
  gsl_set_error_handler_off();

  std::unique_ptr<gsl_vector, VectorDeleter> x(gsl_vector_alloc(dim));
  std::unique_ptr<gsl_vector, VectorDeleter> step(gsl_vector_alloc(dim));
  for (std::size_t k = 0; k < dim; ++k) gsl_vector_set(x.get(), k, start[k]);
  gsl_vector_set_all(step.get(), options.initial_step);

  gsl_multimin_function fn;
  fn.n = dim;
  fn.f = &trampoline;
  fn.params = const_cast<Objective*>(&objective);

  std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> solver(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim));
  gsl_multimin_fminimizer_set(solver.get(), &fn, x.get(), step.get());

  SimplexOutcome out;
  while (out.iterations < options.max_iterations) {
    ++out.iterations;
    if (gsl_multimin_fminimizer_iterate(solver.get()) != GSL_SUCCESS) break;
    const double size = gsl_multimin_fminimizer_size(solver.get());
    if (gsl_multimin_test_size(size, options.size_tolerance) == GSL_SUCCESS) {
      out.converged = true;
      break;
    }
  }
  const gsl_vector* best = gsl_multimin_fminimizer_x(solver.get());
  out.x.assign(best->data, best->data + dim);
  out.value = gsl_multimin_fminimizer_minimum(solver.get());
  return out;
}

}  // namespace polygap
