import shutil
import typing as tp
from dataclasses import dataclass
from pathlib import Path
from types import ModuleType

import jinja2
import toolz
import yaml

import zerocount


@dataclass
class Structure:
    obj: tp.Any
    name_path: str
    module_path: str
    members: tp.List[str]


def get(module, name_path):

    all_members = sorted(getattr(module, "__all__", []))

    outputs = {
        name: get(obj, f"{name_path}.{name}")
        if isinstance(obj, ModuleType)
        else Structure(
            obj=obj,
            name_path=f"{name_path}.{name}",
            module_path=f"{getattr(obj, '__module__', module.__name__)}.{name}",
            members=list(getattr(obj, "__all__", [])),
        )
        for obj, name in ((getattr(module, name), name) for name in all_members)
    }

    return {k: v for k, v in outputs.items() if v}


def leaves(tree) -> tp.Iterator[Structure]:
    if isinstance(tree, Structure):
        yield tree
    else:
        for value in tree.values():
            yield from leaves(value)


def page(structure: Structure) -> str:
    return structure.name_path.replace("zerocount", "api").replace(".", "/") + ".md"


def nav(tree):
    if isinstance(tree, Structure):
        return page(tree)
    return toolz.valmap(nav, tree)


docs_info = {
    **get(zerocount, "zerocount"),
    "constants": get(zerocount.constants, "zerocount.constants"),
    "study": get(zerocount.study, "zerocount.study"),
    "zeros": get(zerocount.zeros, "zerocount.zeros"),
}

# populate mkdocs
with open("mkdocs.yml", "r") as f:
    docs = yaml.safe_load(f)


[api_reference_index] = [
    index for index, section in enumerate(docs["nav"]) if "API Reference" in section
]

docs["nav"][api_reference_index] = {"API Reference": nav(docs_info)}

with open("mkdocs.yml", "w") as f:
    yaml.safe_dump(docs, f, default_flow_style=False, sort_keys=False)


template = """
# {{name_path}}

::: {{module_path}}
    selection:
        inherited_members: true
        {%- if members %}
        members:
        {%- for member in members %}
            - {{member}}
        {%- endfor %}
        {% endif %}
"""

api_path = Path("docs/api")
shutil.rmtree(api_path, ignore_errors=True)

for structure in leaves(docs_info):
    filepath: Path = Path("docs") / page(structure)
    markdown = jinja2.Template(template).render(
        name_path=structure.name_path,
        module_path=structure.module_path,
        members=structure.members,
    )

    filepath.parent.mkdir(parents=True, exist_ok=True)
    filepath.write_text(markdown)
