#!/usr/bin/env python3
# Copyright 2026 The readlab Authors.
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

"""Regenerates fixture_50.jsonl: 50 synthetic biomedical triplets.

Usage: python3 make_fixture.py > fixture_50.jsonl
"""

import json
import random

TECH_SUBJECTS = [
    "The flaviviral envelope protein", "Neuroinvasive encephalitis", "Reelin signaling",
    "Hepatic gluconeogenesis", "The transcriptional regulator", "Mitochondrial dysfunction",
    "Plasmodium falciparum infection", "Chronic inflammation", "The innate immune response",
    "Synaptic plasticity",
]
TECH_VERBS = ["modulates", "attenuates", "regulates", "induces", "inhibits", "mediates"]
TECH_OBJECTS = [
    "cytokine expression in murine macrophages", "viral replication within avian hosts",
    "neuronal migration during cortical development", "insulin sensitivity in hepatocytes",
    "apoptotic pathways of infected erythrocytes", "antigen presentation by dendritic cells",
    "the transmission dynamics of arboviral pathogens", "oxidative phosphorylation efficiency",
]
PLAIN_SUBJECTS = ["This germ", "The brain", "Our bodies", "The liver", "Mosquitoes",
                  "Sick birds", "Many people", "This gene"]
PLAIN_VERBS = ["help", "change", "slow", "spread", "fight", "make"]
PLAIN_OBJECTS = ["the illness", "new cells", "the fever", "sugar in the blood",
                 "the body's defenses", "the disease in summer"]


def sentence(rng, subjects, verbs, objects, numbered=False):
    text = f"{rng.choice(subjects)} {rng.choice(verbs)} {rng.choice(objects)}"
    if numbered:
        text += f" in {rng.randint(12, 980)} samples"
    return text + "."


def main():
    rng = random.Random(20260101)
    for i in range(50):
        tech = " ".join(sentence(rng, TECH_SUBJECTS, TECH_VERBS, TECH_OBJECTS, rng.random() < 0.4)
                        for _ in range(rng.randint(2, 5)))
        plain = " ".join(sentence(rng, PLAIN_SUBJECTS, PLAIN_VERBS, PLAIN_OBJECTS)
                         for _ in range(rng.randint(2, 4)))
        document = " ".join([tech] + [sentence(rng, TECH_SUBJECTS, TECH_VERBS, TECH_OBJECTS, True)
                                      for _ in range(rng.randint(4, 8))] + [plain])
        record = {
            "id": f"fx{i:03d}",
            "document": document,
            "technical_summary": tech,
            "plain_summary": plain if i % 10 != 9 else None,
        }
        print(json.dumps(record, ensure_ascii=False))


if __name__ == "__main__":
    main()
