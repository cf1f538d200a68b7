#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "mdade/burnside.hpp"
#include "mdade/cli.hpp"
#include "mdade/context.hpp"
#include "mdade/dade.hpp"
#include "mdade/lambda_ring.hpp"
#include "mdade/mackey.hpp"
#include "mdade/verify.hpp"

namespace py = pybind11;
using namespace mdade;

namespace {

using StringMatrix = std::vector<std::vector<std::string>>;

// Holds the context plus the python-facing views of the main operations.
class Group {
public:
    explicit Group(const std::string& spec, int max_order = 32)
        : ctx_(make_context(spec, max_order)) {}

    std::string name() const { return ctx_->name(); }
    int order() const { return ctx_->order(); }
    int subgroup_count() const { return int(ctx_->lat.subgroups.size()); }
    int class_count() const { return ctx_->lat.num_classes(); }
    int subquotient_class_count() const { return ctx_->sq().num_classes(); }
    int cyclic_class_count() const { return int(ctx_->lat.cyclic_classes().size()); }

    StringMatrix marks() const { return ctx_->mark_table_matrix().to_strings(); }
    StringMatrix lin() const { return lin_matrix(*ctx_).to_strings(); }
    StringMatrix lin_kernel_basis() const { return lin_kernel(*ctx_).to_strings(); }
    StringMatrix alpha() const { return alpha_matrix(*ctx_).to_strings(); }
    StringMatrix linmu_direct() const { return lin_mu_direct(*ctx_).to_strings(); }
    StringMatrix linmu_via_alpha() const { return lin_mu_via_alpha(*ctx_).to_strings(); }
    StringMatrix linmu_kernel() const { return lin_mu_kernel(*ctx_).to_strings(); }
    StringMatrix underline_basis() const { return underline_dmu(*ctx_).to_strings(); }
    int mackey_dade_dim() const { return dmu_dim(*ctx_); }

    std::vector<std::pair<int, std::string>> lambda_product(int left, int right) const {
        LambdaElement prod =
            lambda_mult(lambda_basis(*ctx_, left), lambda_basis(*ctx_, right));
        std::vector<std::pair<int, std::string>> out;
        for (int c = 0; c < int(prod.coords.size()); ++c)
            if (prod.coords[c] != 0) out.emplace_back(c, prod.coords[c].get_str());
        return out;
    }

    int mackey_algebra_dim() const { return build_algebra(ctx_).dim(); }

    std::vector<int> burnside_bar_dims(const std::string& field) const {
        bool fp = field == "Fp";
        MackeyFunctor m =
            burnside_functor(ctx_, fp ? Field::Fp : Field::Q, fp ? ctx_->group.prime : 0);
        return bar_dims(m);
    }

private:
    std::shared_ptr<const GroupContext> ctx_;
};

py::dict check_to_dict(const CheckResult& c) {
    py::dict d;
    d["id"] = c.id;
    d["theorem"] = c.theorem;
    d["status"] = c.passed ? "pass" : "fail";
    d["witness"] = c.witness;
    d["millis"] = c.millis;
    return d;
}

py::dict verify_group(const std::string& spec, std::uint64_t seed, int max_order) {
    VerificationReport rep = run_catalog(spec, seed, max_order);
    py::dict d;
    d["group"] = rep.group;
    d["order"] = rep.order;
    d["all_passed"] = rep.all_passed();
    py::list checks;
    for (const CheckResult& c : rep.checks) checks.append(check_to_dict(c));
    d["checks"] = checks;
    return d;
}

}  // namespace

PYBIND11_MODULE(_mdade, m) {
    m.doc() = "exact computations with Mackey functors, subquotient rings and Dade groups";

    py::class_<Group>(m, "Group")
        .def(py::init<const std::string&, int>(), py::arg("spec"), py::arg("max_order") = 32)
        .def_property_readonly("name", &Group::name)
        .def_property_readonly("order", &Group::order)
        .def("subgroup_count", &Group::subgroup_count)
        .def("class_count", &Group::class_count)
        .def("subquotient_class_count", &Group::subquotient_class_count)
        .def("cyclic_class_count", &Group::cyclic_class_count)
        .def("marks", &Group::marks)
        .def("lin", &Group::lin)
        .def("lin_kernel", &Group::lin_kernel_basis)
        .def("alpha", &Group::alpha)
        .def("linmu_direct", &Group::linmu_direct)
        .def("linmu_via_alpha", &Group::linmu_via_alpha)
        .def("linmu_kernel", &Group::linmu_kernel)
        .def("mackey_dade_dim", &Group::mackey_dade_dim)
        .def("underline_basis", &Group::underline_basis)
        .def("lambda_product", &Group::lambda_product, py::arg("left"), py::arg("right"))
        .def("mackey_algebra_dim", &Group::mackey_algebra_dim)
        .def("burnside_bar_dims", &Group::burnside_bar_dims, py::arg("field") = "Q");

    m.def("make_group", [](const std::string& spec, int max_order) {
              return Group(spec, max_order);
          },
          py::arg("spec"), py::arg("max_order") = 32);
    m.def("verify", &verify_group, py::arg("spec"), py::arg("seed") = 1,
          py::arg("max_order") = 32);
    m.def("catalog_ids", [] { return catalog_ids(); });
}
