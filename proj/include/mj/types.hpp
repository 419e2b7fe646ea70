#pragma once

#include <memory>
#include <string>

namespace mj {

// Static types of the MJ language. Value type, cheap to copy.
class MjType {
public:
    enum class Base { Int, Long, Float, Double, Bool, String, Class, Array, Null };

    MjType() : base_(Base::Int) {}

    static MjType int_t() { return MjType(Base::Int); }
    static MjType long_t() { return MjType(Base::Long); }
    static MjType float_t() { return MjType(Base::Float); }
    static MjType double_t() { return MjType(Base::Double); }
    static MjType bool_t() { return MjType(Base::Bool); }
    static MjType string_t() { return MjType(Base::String); }
    static MjType null_t() { return MjType(Base::Null); }
    static MjType class_t(std::string name) {
        MjType t(Base::Class);
        t.class_name_ = std::move(name);
        return t;
    }
    static MjType array_of(MjType elem) {
        MjType t(Base::Array);
        t.elem_ = std::make_shared<MjType>(std::move(elem));
        return t;
    }

    Base base() const { return base_; }
    bool is_class() const { return base_ == Base::Class; }
    bool is_array() const { return base_ == Base::Array; }
    bool is_null() const { return base_ == Base::Null; }
    bool is_integer() const { return base_ == Base::Int || base_ == Base::Long; }
    bool is_floating() const { return base_ == Base::Float || base_ == Base::Double; }
    bool is_numeric() const { return is_integer() || is_floating(); }
    bool is_reference() const { return is_class() || is_array() || base_ == Base::String; }

    const std::string& class_name() const { return class_name_; }
    const MjType& elem() const { return *elem_; }

    bool operator==(const MjType& o) const {
        if (base_ != o.base_) return false;
        if (base_ == Base::Class) return class_name_ == o.class_name_;
        if (base_ == Base::Array) return *elem_ == *o.elem_;
        return true;
    }
    bool operator!=(const MjType& o) const { return !(*this == o); }

    // The assignability partial order: identical, int->long, float->double,
    // null->class/array/string. Nothing else.
    static bool assignable(const MjType& from, const MjType& to) {
        if (from == to) return true;
        if (from.base_ == Base::Int && to.base_ == Base::Long) return true;
        if (from.base_ == Base::Float && to.base_ == Base::Double) return true;
        if (from.base_ == Base::Null && to.is_reference()) return true;
        return false;
    }

    std::string str() const {
        switch (base_) {
        case Base::Int: return "int";
        case Base::Long: return "long";
        case Base::Float: return "float";
        case Base::Double: return "double";
        case Base::Bool: return "bool";
        case Base::String: return "string";
        case Base::Class: return class_name_;
        case Base::Array: return elem_->str() + "[]";
        case Base::Null: return "null";
        }
        return "?";
    }

private:
    explicit MjType(Base b) : base_(b) {}

    Base base_;
    std::string class_name_;
    std::shared_ptr<const MjType> elem_;
};

} // namespace mj
