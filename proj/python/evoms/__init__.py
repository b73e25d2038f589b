# Copyright 2026 The evoms authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Event-camera object-motion segmentation with a compute-array model."""

from ._evoms import (  # noqa: F401
    BoolGrid,
    DvsEvent,
    EventFrame,
    FeasibilityError,
    GroundTruthMask,
    HwArrayConfig,
    OmsConfig,
    OmsFrame,
    ParseError,
    ValidationError,
    __version__,
    accumulate_frame,
    build_array_config,
    gen_scene,
    iou,
    oms_compute,
    oms_reference,
    parse_event_stream,
    programming_plan_json,
    quantize_tau,
    simulate_frame,
    trip_fraction,
    upsample_to_input,
)
