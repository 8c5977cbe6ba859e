#include "vest/instance.hpp"

namespace vest {

std::string target_name(TargetVariant t) {
    switch (t) {
        case TargetVariant::VectorZero: return "vector_zero";
        case TargetVariant::MatrixZero: return "matrix_zero";
        case TargetVariant::MatrixIdentity: return "matrix_identity";
    }
    throw DomainError("unknown target variant");
}

TargetVariant target_from_name(const std::string& name) {
    if (name == "vector_zero") return TargetVariant::VectorZero;
    if (name == "matrix_zero") return TargetVariant::MatrixZero;
    if (name == "matrix_identity") return TargetVariant::MatrixIdentity;
    throw MalformedInputError("unknown target '" + name + "'");
}

VestInstance::VestInstance(FieldTag tag_, int dim_, std::vector<Matrix> transforms_,
                           std::optional<Matrix> s_, std::optional<Vector> v_,
                           TargetVariant target_)
    : tag(tag_), dim(dim_), transforms(std::move(transforms_)), s(std::move(s_)),
      v(std::move(v_)), target(target_) {
    if (dim < 1) throw ShapeError("instance dimension must be >= 1");
    for (const auto& t : transforms) {
        if (t.tag() != tag) throw MixedFieldError("transform from a different field");
        if (t.rows() != dim || t.cols() != dim) throw ShapeError("transform is not dim x dim");
    }
    if (target == TargetVariant::VectorZero) {
        if (!v) throw VariantError("vector_zero target requires v");
        if (v->tag() != tag) throw MixedFieldError("v from a different field");
        if (v->dim() != dim) throw ShapeError("v has wrong dimension");
        if (s) {
            if (s->tag() != tag) throw MixedFieldError("s from a different field");
            if (s->cols() != dim) throw ShapeError("s must have dim columns");
            if (s->rows() < 1) throw ShapeError("s must have at least one row");
        }
    } else {
        if (s || v) throw VariantError("matrix targets take neither s nor v");
    }
}

Matrix VestInstance::effective_s() const {
    return s ? *s : Matrix::identity(tag, dim);
}

VestInstance make_vector_zero_instance(std::vector<Matrix> transforms, std::optional<Matrix> s,
                                       Vector v) {
    const FieldTag tag = v.tag();
    const int dim = v.dim();
    return VestInstance(tag, dim, std::move(transforms), std::move(s), std::move(v),
                        TargetVariant::VectorZero);
}

VestInstance make_matrix_target_instance(std::vector<Matrix> transforms, TargetVariant target) {
    if (transforms.empty()) throw ShapeError("matrix-target instance needs at least one transform");
    const FieldTag tag = transforms.front().tag();
    const int dim = transforms.front().rows();
    return VestInstance(tag, dim, std::move(transforms), std::nullopt, std::nullopt, target);
}

} // namespace vest
