"""Document format, fixture library, generator and the ``dblcat`` command."""
