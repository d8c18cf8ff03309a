#include "mate/interpreter/native_backend.hpp"

namespace mate::interpreter {

namespace {

class NativeBackend final : public InterpreterBackend {
 public:
  NativeBackend(std::shared_ptr<const classifier::NativeModel> model, std::string name)
      : model_(std::move(model)), name_(std::move(name)) {
    if (!model_) throw std::invalid_argument("native backend needs a model");
    if (name_.empty()) name_ = "native:" + std::string(classifier::algorithm_name(*model_));
  }

  std::string name() const override { return name_; }

  std::string classify_raw(std::string_view prompt) const override {
    return std::string(to_string(classifier::predict_label(*model_, prompt)));
  }

 private:
  std::shared_ptr<const classifier::NativeModel> model_;
  std::string name_;
};

}  // namespace

BackendPtr make_native_backend(std::shared_ptr<const classifier::NativeModel> model,
                               std::string name) {
  return std::make_shared<NativeBackend>(std::move(model), std::move(name));
}

}  // namespace mate::interpreter
