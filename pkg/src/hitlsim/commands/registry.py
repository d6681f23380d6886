"""Registry mapping subcommand names and aliases to command classes."""

from typing import TypeVar

from hitlsim.commands.base import BaseCommand
from hitlsim.exceptions import InvalidArgumentError

CommandClass = TypeVar("CommandClass", bound=type[BaseCommand])


class CommandRegistry:
    """Class-level table of subcommands.

    Commands register themselves at import time:

        @CommandRegistry.register
        class EvaluateCommand(BaseCommand):
            ...

        CommandRegistry.create("evaluate")  # alias of "eval"
    """

    _commands: dict[str, type[BaseCommand]] = {}
    _aliases: dict[str, str] = {}

    @classmethod
    def register(cls, command_class: CommandClass) -> CommandClass:
        """Class decorator adding a command under its name and aliases.

        Raises:
            ValueError: If the name or an alias is already taken.
        """
        probe = command_class()
        taken = cls._commands.keys() | cls._aliases.keys()
        if probe.name in cls._commands:
            raise ValueError(f"Command '{probe.name}' is already registered")
        clashes = [a for a in probe.aliases if a in taken or a == probe.name]
        if clashes:
            raise ValueError(f"Alias '{clashes[0]}' conflicts with existing command or alias")

        cls._commands[probe.name] = command_class
        cls._aliases.update(dict.fromkeys(probe.aliases, probe.name))
        return command_class

    @classmethod
    def canonical_name(cls, name: str) -> str | None:
        if name in cls._commands:
            return name
        return cls._aliases.get(name)

    @classmethod
    def get(cls, name: str) -> type[BaseCommand] | None:
        canonical = cls.canonical_name(name)
        return None if canonical is None else cls._commands[canonical]

    @classmethod
    def create(cls, name: str) -> BaseCommand:
        """Instantiate the command registered under ``name``.

        Raises:
            InvalidArgumentError: No such command or alias.
        """
        command_class = cls.get(name)
        if command_class is None:
            known = ", ".join(cls.names())
            raise InvalidArgumentError(f"Unknown command '{name}' (known: {known})")
        return command_class()

    @classmethod
    def names(cls) -> list[str]:
        return sorted(cls._commands)
